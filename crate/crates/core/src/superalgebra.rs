//! Finite-dimensional Lie superalgebras given by structure constants.
//!
//! The basis is ordered with the even block first: indices `0..m` are even,
//! `m..m+n` are odd. Structure constants are stored densely for every
//! ordered pair, so a file with inconsistent entries is caught by
//! [`LieSuperalgebra::validate`] instead of being repaired silently.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::field::PrimeField;
use crate::linalg::FpMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("element has {found} coordinates, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("expected {expected} structure constants, found {found}")]
    ConstantCount { expected: usize, found: usize },
    #[error("basis index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("element is not even")]
    NotEven,
    #[error("an iterated bracket needs at least one argument")]
    EmptyBracket,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(b: u8) -> Self {
        if b.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn sum(self, other: Self) -> Self {
        Self::from_bit(self.bit() + other.bit())
    }

    /// (-1)^{|a||b|}
    pub fn koszul(a: Self, b: Self) -> i64 {
        if a == Parity::Odd && b == Parity::Odd {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Ordered basis labels, even block first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperBasis {
    even: Vec<String>,
    odd: Vec<String>,
}

impl SuperBasis {
    pub fn new(even: Vec<String>, odd: Vec<String>) -> Result<Self, AlgebraError> {
        let mut seen = HashSet::new();
        for label in even.iter().chain(&odd) {
            if !seen.insert(label.as_str()) {
                return Err(AlgebraError::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self { even, odd })
    }

    /// Basis `e1..em | e(m+1)..e(m+n)`.
    pub fn generic(m: usize, n: usize) -> Self {
        Self {
            even: (1..=m).map(|i| format!("e{i}")).collect(),
            odd: (m + 1..=m + n).map(|i| format!("e{i}")).collect(),
        }
    }

    pub fn even_dim(&self) -> usize {
        self.even.len()
    }

    pub fn odd_dim(&self) -> usize {
        self.odd.len()
    }

    pub fn dim(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        if i < self.even.len() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn label(&self, i: usize) -> &str {
        if i < self.even.len() {
            &self.even[i]
        } else {
            &self.odd[i - self.even.len()]
        }
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.even.iter().chain(&self.odd).map(String::as_str)
    }

    pub fn even_labels(&self) -> &[String] {
        &self.even
    }

    pub fn odd_labels(&self) -> &[String] {
        &self.odd
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels().position(|l| l == label)
    }
}

/// Coordinates of an element over the ordered basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperElement {
    coords: Vec<u32>,
}

impl SuperElement {
    pub fn zero(dim: usize) -> Self {
        Self {
            coords: vec![0; dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut coords = vec![0; dim];
        coords[i] = 1;
        Self { coords }
    }

    pub fn from_coords(coords: Vec<u32>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, field: PrimeField, other: &Self) -> Self {
        Self {
            coords: field.add_vec(&self.coords, &other.coords),
        }
    }

    pub fn sub(&self, field: PrimeField, other: &Self) -> Self {
        Self {
            coords: field.sub_vec(&self.coords, &other.coords),
        }
    }

    pub fn scale(&self, field: PrimeField, a: u32) -> Self {
        Self {
            coords: field.scale(a, &self.coords),
        }
    }
}

/// Which axiom a validation step covers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub passed: bool,
    /// First violating basis tuple (0-based indices), if any.
    pub counterexample: Option<Vec<usize>>,
    pub detail: Option<String>,
}

impl AxiomCheck {
    fn pass() -> Self {
        Self {
            passed: true,
            counterexample: None,
            detail: None,
        }
    }

    fn fail(indices: Vec<usize>, detail: String) -> Self {
        Self {
            passed: false,
            counterexample: Some(indices),
            detail: Some(detail),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub skew_symmetry: AxiomCheck,
    pub grading: AxiomCheck,
    pub jacobi: AxiomCheck,
    /// `[g,[g,g]] = 0` for odd `g`; only checked in characteristic 3.
    pub odd_cube: AxiomCheck,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.skew_symmetry.passed && self.grading.passed && self.jacobi.passed && self.odd_cube.passed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSuperalgebra {
    field: PrimeField,
    basis: SuperBasis,
    /// `constants[(i * d + j) * d + k]` is the coefficient of `e_k` in `[e_i, e_j]`.
    constants: Vec<u32>,
}

impl LieSuperalgebra {
    /// The abelian algebra on `basis`.
    pub fn abelian(field: PrimeField, basis: SuperBasis) -> Self {
        let d = basis.dim();
        Self {
            field,
            basis,
            constants: vec![0; d * d * d],
        }
    }

    pub fn from_constants(
        field: PrimeField,
        basis: SuperBasis,
        constants: Vec<u32>,
    ) -> Result<Self, AlgebraError> {
        let d = basis.dim();
        if constants.len() != d * d * d {
            return Err(AlgebraError::ConstantCount {
                expected: d * d * d,
                found: constants.len(),
            });
        }
        let p = field.characteristic();
        Ok(Self {
            field,
            basis,
            constants: constants.into_iter().map(|c| c % p).collect(),
        })
    }

    /// Sets `[e_i, e_j]` exactly as given; the reverse pair is left alone.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: &[u32]) -> Result<(), AlgebraError> {
        let d = self.dim();
        if i >= d || j >= d {
            return Err(AlgebraError::IndexOutOfRange(i.max(j)));
        }
        if value.len() != d {
            return Err(AlgebraError::DimensionMismatch {
                expected: d,
                found: value.len(),
            });
        }
        let p = self.field.characteristic();
        let start = (i * d + j) * d;
        for (slot, &v) in self.constants[start..start + d].iter_mut().zip(value) {
            *slot = v % p;
        }
        Ok(())
    }

    /// Sets `[e_i, e_j]` and fills `[e_j, e_i]` by super skew-symmetry.
    pub fn set_bracket_skew(&mut self, i: usize, j: usize, value: &[u32]) -> Result<(), AlgebraError> {
        self.set_bracket(i, j, value)?;
        let sign = -Parity::koszul(self.parity(i), self.parity(j));
        let f = self.field;
        let reversed: Vec<u32> = value.iter().map(|&v| f.mul(f.reduce(sign), v)).collect();
        self.set_bracket(j, i, &reversed)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn basis(&self) -> &SuperBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn even_dim(&self) -> usize {
        self.basis.even_dim()
    }

    pub fn odd_dim(&self) -> usize {
        self.basis.odd_dim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis.parity(i)
    }

    pub fn constants(&self) -> &[u32] {
        &self.constants
    }

    /// Coefficient vector of `[e_i, e_j]`.
    #[inline]
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[u32] {
        let d = self.dim();
        let start = (i * d + j) * d;
        &self.constants[start..start + d]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.basis_bracket(i, j)[k]
    }

    pub fn element(&self, coords: Vec<u32>) -> Result<SuperElement, AlgebraError> {
        self.check_len(coords.len())?;
        let p = self.field.characteristic();
        Ok(SuperElement::from_coords(coords.into_iter().map(|c| c % p).collect()))
    }

    pub fn basis_element(&self, i: usize) -> SuperElement {
        SuperElement::basis(self.dim(), i)
    }

    fn check_len(&self, found: usize) -> Result<(), AlgebraError> {
        if found == self.dim() {
            Ok(())
        } else {
            Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found,
            })
        }
    }

    /// Parity of a homogeneous element; `None` if it mixes both blocks.
    /// Zero counts as even.
    pub fn homogeneous_parity(&self, g: &SuperElement) -> Option<Parity> {
        let m = self.even_dim();
        let has_even = g.coords()[..m].iter().any(|&c| c != 0);
        let has_odd = g.coords()[m..].iter().any(|&c| c != 0);
        match (has_even, has_odd) {
            (_, false) => Some(Parity::Even),
            (false, true) => Some(Parity::Odd),
            (true, true) => None,
        }
    }

    pub fn is_even(&self, g: &SuperElement) -> bool {
        g.coords()[self.even_dim()..].iter().all(|&c| c == 0)
    }

    /// Bracket on raw coordinate slices of the right length.
    pub(crate) fn bracket_coords(&self, g: &[u32], h: &[u32]) -> Vec<u32> {
        let f = self.field;
        let d = self.dim();
        let mut out = vec![0; d];
        for (i, &gi) in g.iter().enumerate() {
            if gi == 0 {
                continue;
            }
            for (j, &hj) in h.iter().enumerate() {
                if hj == 0 {
                    continue;
                }
                f.axpy(&mut out, f.mul(gi, hj), self.basis_bracket(i, j));
            }
        }
        out
    }

    pub fn bracket(&self, g: &SuperElement, h: &SuperElement) -> Result<SuperElement, AlgebraError> {
        self.check_len(g.len())?;
        self.check_len(h.len())?;
        Ok(SuperElement::from_coords(self.bracket_coords(g.coords(), h.coords())))
    }

    /// Left-nested bracket `[[...[[g1, g2], g3], ...], gj]`.
    pub fn n_fold_bracket(&self, args: &[SuperElement]) -> Result<SuperElement, AlgebraError> {
        let (first, rest) = args.split_first().ok_or(AlgebraError::EmptyBracket)?;
        self.check_len(first.len())?;
        let mut acc = first.coords().to_vec();
        for g in rest {
            self.check_len(g.len())?;
            if acc.iter().all(|&c| c == 0) {
                break;
            }
            acc = self.bracket_coords(&acc, g.coords());
        }
        Ok(SuperElement::from_coords(acc))
    }

    /// Matrix of `h -> [g, h]`; column `b` holds `[g, e_b]`.
    pub fn ad_matrix(&self, g: &SuperElement) -> Result<FpMatrix, AlgebraError> {
        self.check_len(g.len())?;
        let d = self.dim();
        let mut m = FpMatrix::zeros(self.field, d, d);
        for b in 0..d {
            let col = self.bracket_coords(g.coords(), &self.basis_element(b).into_coords());
            for (r, v) in col.into_iter().enumerate() {
                m.set(r, b, v);
            }
        }
        Ok(m)
    }

    pub fn validate(&self) -> ValidationReport {
        ValidationReport {
            skew_symmetry: self.check_skew(),
            grading: self.check_grading(),
            jacobi: self.check_jacobi(),
            odd_cube: self.check_odd_cube(),
        }
    }

    fn check_skew(&self) -> AxiomCheck {
        let f = self.field;
        let d = self.dim();
        for i in 0..d {
            for j in i..d {
                let sign = f.reduce(-Parity::koszul(self.parity(i), self.parity(j)));
                let lhs = self.basis_bracket(j, i);
                let rhs = f.scale(sign, self.basis_bracket(i, j));
                if let Some(k) = (0..d).find(|&k| lhs[k] != rhs[k]) {
                    return AxiomCheck::fail(
                        vec![i, j, k],
                        format!(
                            "[{b}, {a}] and [{a}, {b}] disagree on {c}",
                            a = self.basis.label(i),
                            b = self.basis.label(j),
                            c = self.basis.label(k)
                        ),
                    );
                }
            }
        }
        AxiomCheck::pass()
    }

    fn check_grading(&self) -> AxiomCheck {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let target = self.parity(i).sum(self.parity(j));
                let bracket = self.basis_bracket(i, j);
                if let Some(k) = (0..d).find(|&k| bracket[k] != 0 && self.parity(k) != target) {
                    return AxiomCheck::fail(
                        vec![i, j, k],
                        format!(
                            "[{}, {}] has a {} component along {}",
                            self.basis.label(i),
                            self.basis.label(j),
                            self.parity(k),
                            self.basis.label(k)
                        ),
                    );
                }
            }
        }
        AxiomCheck::pass()
    }

    /// `[u,[v,w]] = [[u,v],w] + (-1)^{|u||v|} [v,[u,w]]` on all basis triples.
    fn check_jacobi(&self) -> AxiomCheck {
        let f = self.field;
        let d = self.dim();
        for u in 0..d {
            let eu = self.basis_element(u).into_coords();
            for v in 0..d {
                let ev = self.basis_element(v).into_coords();
                let uv = self.basis_bracket(u, v).to_vec();
                let sign = f.reduce(Parity::koszul(self.parity(u), self.parity(v)));
                for w in 0..d {
                    let vw = self.basis_bracket(v, w);
                    let uw = self.basis_bracket(u, w);
                    let lhs = self.bracket_coords(&eu, vw);
                    let mut rhs = self.bracket_coords(&uv, &self.basis_element(w).into_coords());
                    f.axpy(&mut rhs, sign, &self.bracket_coords(&ev, uw));
                    if lhs != rhs {
                        return AxiomCheck::fail(
                            vec![u, v, w],
                            format!(
                                "graded Jacobi fails on ({}, {}, {})",
                                self.basis.label(u),
                                self.basis.label(v),
                                self.basis.label(w)
                            ),
                        );
                    }
                }
            }
        }
        AxiomCheck::pass()
    }

    /// Polarized form of `[g,[g,g]] = 0`: for every multiset `{a,b,c}` of odd
    /// indices, the sum of `[e_x,[e_y,e_z]]` over the distinct orderings
    /// `(x,y,z)` of the multiset is the coefficient of `t_a t_b t_c` in
    /// `[g,[g,g]]` with `g = sum t_i e_i`, so all of them must vanish.
    fn check_odd_cube(&self) -> AxiomCheck {
        if self.field.characteristic() != 3 {
            return AxiomCheck::pass();
        }
        let f = self.field;
        let d = self.dim();
        let odd: Vec<usize> = (self.even_dim()..d).collect();
        for (ia, &a) in odd.iter().enumerate() {
            for (ib, &b) in odd.iter().enumerate().skip(ia) {
                for &c in odd.iter().skip(ib) {
                    let mut orderings = vec![[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]];
                    orderings.sort_unstable();
                    orderings.dedup();
                    let mut total = vec![0; d];
                    for [x, y, z] in orderings {
                        let inner = self.basis_bracket(y, z);
                        let outer = self.bracket_coords(&self.basis_element(x).into_coords(), inner);
                        total = f.add_vec(&total, &outer);
                    }
                    if total.iter().any(|&t| t != 0) {
                        return AxiomCheck::fail(
                            vec![a, b, c],
                            format!(
                                "[g,[g,g]] has a nonzero t-coefficient at ({}, {}, {})",
                                self.basis.label(a),
                                self.basis.label(b),
                                self.basis.label(c)
                            ),
                        );
                    }
                }
            }
        }
        AxiomCheck::pass()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// x1, x2, x3 | y1 with [x1,x2] = x3, [y1,y1] = x3.
    fn h11(p: u32) -> LieSuperalgebra {
        let basis = SuperBasis::new(
            vec!["x1".into(), "x2".into(), "x3".into()],
            vec!["y1".into()],
        )
        .unwrap();
        let mut a = LieSuperalgebra::abelian(field(p), basis);
        a.set_bracket_skew(0, 1, &[0, 0, 1, 0]).unwrap();
        a.set_bracket_skew(3, 3, &[0, 0, 1, 0]).unwrap();
        a
    }

    #[test]
    fn duplicate_labels_rejected() {
        let err = SuperBasis::new(vec!["a".into()], vec!["a".into()]).unwrap_err();
        assert_eq!(err, AlgebraError::DuplicateLabel("a".into()));
    }

    #[test]
    fn heisenberg_brackets() {
        let a = h11(3);
        let x = |i| a.basis_element(i);
        assert_eq!(a.bracket(&x(0), &x(1)).unwrap(), x(2));
        assert_eq!(a.bracket(&x(3), &x(3)).unwrap(), x(2));
        for i in 0..4 {
            assert!(a.bracket(&x(2), &x(i)).unwrap().is_zero());
        }
        assert!(a.validate().all_passed());
    }

    #[test]
    fn bracket_length_mismatch() {
        let a = h11(3);
        let short = SuperElement::zero(2);
        assert_eq!(
            a.bracket(&short, &a.basis_element(0)),
            Err(AlgebraError::DimensionMismatch { expected: 4, found: 2 })
        );
    }

    #[test]
    fn n_fold_brackets() {
        let a = h11(5);
        let x = |i| a.basis_element(i);
        assert_eq!(a.n_fold_bracket(&[x(0)]).unwrap(), x(0));
        assert!(a.n_fold_bracket(&[x(0), x(1), x(0)]).unwrap().is_zero());
        assert_eq!(a.n_fold_bracket(&[]), Err(AlgebraError::EmptyBracket));
    }

    #[test]
    fn ad_matrix_of_x1() {
        let a = h11(3);
        let ad = a.ad_matrix(&a.basis_element(0)).unwrap();
        let mut expected = FpMatrix::zeros(a.field(), 4, 4);
        expected.set(2, 1, 1);
        assert_eq!(ad, expected);
        assert!(ad.mul(&ad).unwrap().is_zero());
        assert!(a.ad_matrix(&SuperElement::zero(4)).unwrap().is_zero());
    }

    #[test]
    fn skew_failure_detected() {
        let mut a = LieSuperalgebra::abelian(field(5), SuperBasis::generic(3, 0));
        a.set_bracket(0, 1, &[0, 0, 1]).unwrap();
        a.set_bracket(1, 0, &[0, 0, 1]).unwrap();
        let report = a.validate();
        assert!(!report.skew_symmetry.passed);
        assert_eq!(report.skew_symmetry.counterexample, Some(vec![0, 1, 2]));
    }

    #[test]
    fn grading_failure_detected() {
        let mut a = LieSuperalgebra::abelian(field(5), SuperBasis::generic(2, 1));
        // [e1, e2] landing in the odd e3
        a.set_bracket_skew(0, 1, &[0, 0, 1]).unwrap();
        assert!(!a.validate().grading.passed);
    }

    #[test]
    fn jacobi_failure_detected() {
        // [e1,e2]=e3, [e1,e3]=e1: the Jacobiator on (e1,e2,e3) is e3
        let mut a = LieSuperalgebra::abelian(field(5), SuperBasis::generic(3, 0));
        a.set_bracket_skew(0, 1, &[0, 0, 1]).unwrap();
        a.set_bracket_skew(0, 2, &[1, 0, 0]).unwrap();
        assert!(a.validate().skew_symmetry.passed);
        assert!(!a.validate().jacobi.passed);
    }

    #[test]
    fn odd_cube_only_in_char_three() {
        // one even e1, one odd e2: [e2,e2] = e1, [e1,e2] = e2 gives [g,[g,g]] = -g^3 e2
        for (p, expect_ok) in [(3, false), (5, true)] {
            let mut a = LieSuperalgebra::abelian(field(p), SuperBasis::generic(1, 1));
            a.set_bracket_skew(1, 1, &[1, 0]).unwrap();
            a.set_bracket_skew(0, 1, &[0, 1]).unwrap();
            assert_eq!(a.validate().odd_cube.passed, expect_ok, "p = {p}");
        }
    }

    #[test]
    fn abelian_passes() {
        let a = LieSuperalgebra::abelian(field(3), SuperBasis::generic(2, 2));
        assert!(a.validate().all_passed());
    }
}
