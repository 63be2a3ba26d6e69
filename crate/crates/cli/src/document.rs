//! JSON algebra documents.
//!
//! ```json
//! {
//!   "p": 3,
//!   "even_basis": ["x1", "x2", "x3"],
//!   "odd_basis": ["y1"],
//!   "brackets": [{"left": "x1", "right": "x2", "value": [["x3", 1]]}],
//!   "p_operator": [{"on": "x1", "value": [["x3", 1]]}]
//! }
//! ```
//!
//! Unlisted brackets are zero. When only `[a, b]` is listed, `[b, a]` is
//! filled in by super skew-symmetry; when both are listed they are taken
//! as given (and the validator reports any inconsistency). Unlisted
//! `[p]`-images are zero.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use supercohom::{
    AlgebraError, LieSuperalgebra, Parity, PrimeField, RestrictedError, RestrictedSuperalgebra, SuperBasis,
    SuperElement,
};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("field `p`: {0}")]
    Field(#[from] supercohom::FieldError),
    #[error("field `{field}`: unknown label `{label}`")]
    UnknownLabel { field: String, label: String },
    #[error("field `{field}`: duplicate entry for {what}")]
    Duplicate { field: String, what: String },
    #[error("field `{field}`: `{label}` is not an even basis label")]
    NotEven { field: String, label: String },
    #[error("field `{field}`: {message}")]
    Invalid { field: String, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Restricted(#[from] RestrictedError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub value: Vec<(String, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct POperatorEntry {
    pub on: String,
    pub value: Vec<(String, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub p: u32,
    pub even_basis: Vec<String>,
    pub odd_basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default)]
    pub p_operator: Vec<POperatorEntry>,
}

impl AlgebraDocument {
    /// Parses and checks labels, `p` and duplicates.
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: Self = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        doc.check()?;
        Ok(doc)
    }

    fn check(&self) -> Result<(), DocumentError> {
        PrimeField::new(self.p)?;
        let basis = self.basis()?;
        let mut pairs = HashSet::new();
        for (k, b) in self.brackets.iter().enumerate() {
            let field = format!("brackets[{k}]");
            for label in [&b.left, &b.right] {
                resolve(&basis, label, &field)?;
            }
            if !pairs.insert((b.left.clone(), b.right.clone())) {
                return Err(DocumentError::Duplicate {
                    field,
                    what: format!("[{}, {}]", b.left, b.right),
                });
            }
            check_terms(&basis, &b.value, &format!("{field}.value"))?;
        }
        let mut seen = HashSet::new();
        for (k, e) in self.p_operator.iter().enumerate() {
            let field = format!("p_operator[{k}]");
            let i = resolve(&basis, &e.on, &field)?;
            if basis.parity(i) != Parity::Even {
                return Err(DocumentError::NotEven { field, label: e.on.clone() });
            }
            if !seen.insert(e.on.clone()) {
                return Err(DocumentError::Duplicate {
                    field,
                    what: format!("{}^[p]", e.on),
                });
            }
            check_terms(&basis, &e.value, &format!("{field}.value"))?;
        }
        Ok(())
    }

    fn basis(&self) -> Result<SuperBasis, DocumentError> {
        SuperBasis::new(self.even_basis.clone(), self.odd_basis.clone()).map_err(|e| DocumentError::Invalid {
            field: "even_basis/odd_basis".into(),
            message: e.to_string(),
        })
    }

    pub fn to_restricted(&self) -> Result<RestrictedSuperalgebra, DocumentError> {
        self.check()?;
        let field = PrimeField::new(self.p)?;
        let basis = self.basis()?;
        let d = basis.dim();
        let listed: HashSet<(&str, &str)> =
            self.brackets.iter().map(|b| (b.left.as_str(), b.right.as_str())).collect();
        let mut alg = LieSuperalgebra::abelian(field, basis.clone());
        for b in &self.brackets {
            let i = basis.index_of(&b.left).expect("checked");
            let j = basis.index_of(&b.right).expect("checked");
            let v = vector(field, &basis, &b.value);
            if listed.contains(&(b.right.as_str(), b.left.as_str())) {
                alg.set_bracket(i, j, &v)?;
            } else {
                alg.set_bracket_skew(i, j, &v)?;
            }
        }
        let mut images = vec![SuperElement::zero(d); basis.even_dim()];
        for e in &self.p_operator {
            let i = basis.index_of(&e.on).expect("checked");
            images[i] = SuperElement::from_coords(vector(field, &basis, &e.value));
        }
        Ok(RestrictedSuperalgebra::new(alg, images)?)
    }

    /// Canonical document for an algebra: brackets `[e_i, e_j]` with
    /// `i <= j` and nonzero value, nonzero `[p]`-images, terms in basis
    /// order with coefficients in `[0, p)`.
    pub fn from_restricted(r: &RestrictedSuperalgebra) -> Self {
        let alg = r.algebra();
        let basis = alg.basis();
        let terms = |v: &[u32]| -> Vec<(String, i64)> {
            v.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(k, &c)| (basis.label(k).to_string(), i64::from(c)))
                .collect()
        };
        let mut brackets = Vec::new();
        for i in 0..alg.dim() {
            for j in i..alg.dim() {
                let v = alg.basis_bracket(i, j);
                if v.iter().any(|&c| c != 0) {
                    brackets.push(BracketEntry {
                        left: basis.label(i).to_string(),
                        right: basis.label(j).to_string(),
                        value: terms(v),
                    });
                }
            }
        }
        let p_operator = (0..alg.even_dim())
            .filter(|&i| !r.image(i).is_zero())
            .map(|i| POperatorEntry {
                on: basis.label(i).to_string(),
                value: terms(r.image(i).coords()),
            })
            .collect();
        Self {
            p: alg.field().characteristic(),
            even_basis: basis.even_labels().to_vec(),
            odd_basis: basis.odd_labels().to_vec(),
            brackets,
            p_operator,
        }
    }

    /// Canonical form: coefficients reduced into `[0, p)`, repeated labels
    /// merged, zero terms dropped, terms and entries sorted by basis index.
    /// Basis label order is kept, since it fixes the basis.
    pub fn canonicalize(&self) -> Result<Self, DocumentError> {
        self.check()?;
        let field = PrimeField::new(self.p)?;
        let basis = self.basis()?;
        let idx = |l: &str| basis.index_of(l).expect("checked");
        let terms = |t: &[(String, i64)]| -> Vec<(String, i64)> {
            vector(field, &basis, t)
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(k, &c)| (basis.label(k).to_string(), i64::from(c)))
                .collect()
        };
        let mut brackets: Vec<BracketEntry> = self
            .brackets
            .iter()
            .map(|b| BracketEntry {
                left: b.left.clone(),
                right: b.right.clone(),
                value: terms(&b.value),
            })
            .collect();
        brackets.sort_by_key(|b| (idx(&b.left), idx(&b.right)));
        let mut p_operator: Vec<POperatorEntry> = self
            .p_operator
            .iter()
            .map(|e| POperatorEntry {
                on: e.on.clone(),
                value: terms(&e.value),
            })
            .collect();
        p_operator.sort_by_key(|e| idx(&e.on));
        Ok(Self {
            p: self.p,
            even_basis: self.even_basis.clone(),
            odd_basis: self.odd_basis.clone(),
            brackets,
            p_operator,
        })
    }

    /// Canonical JSON text (sorted keys, two-space indentation, trailing newline).
    pub fn to_canonical_json(&self) -> Result<String, DocumentError> {
        let canon = self.canonicalize()?;
        Ok(crate::report::to_json(&canon))
    }
}

fn resolve(basis: &SuperBasis, label: &str, field: &str) -> Result<usize, DocumentError> {
    basis.index_of(label).ok_or_else(|| DocumentError::UnknownLabel {
        field: field.to_string(),
        label: label.to_string(),
    })
}

fn check_terms(basis: &SuperBasis, terms: &[(String, i64)], field: &str) -> Result<(), DocumentError> {
    for (k, (label, _)) in terms.iter().enumerate() {
        resolve(basis, label, &format!("{field}[{k}]"))?;
    }
    Ok(())
}

fn vector(field: PrimeField, basis: &SuperBasis, terms: &[(String, i64)]) -> Vec<u32> {
    let mut sums: BTreeMap<usize, u32> = BTreeMap::new();
    for (label, c) in terms {
        let k = basis.index_of(label).expect("checked");
        let slot = sums.entry(k).or_insert(0);
        *slot = field.add(*slot, field.reduce(*c));
    }
    let mut v = vec![0; basis.dim()];
    for (k, c) in sums {
        v[k] = c;
    }
    v
}
