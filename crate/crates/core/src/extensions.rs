//! One-dimensional restricted central extensions `G = g + F c` attached to
//! even restricted 2-cocycles:
//!
//! `[a, b]_G = [a, b] + phi(a, b) c`, `e_i^[p]_G = e_i^[p] + omega(e_i) c`, `c^[p] = 0`.

use serde::Serialize;
use thiserror::Error;

use crate::cochain::{Cochain1, Cochain2, CochainComplex};
use crate::families::{recognize_family, FamilyKind};
use crate::linalg::FpMatrix;
use crate::rescohomology::{CocycleViolation, RestrictedCochain2, RestrictedComplex};
use crate::restricted::RestrictedSuperalgebra;
use crate::superalgebra::{LieSuperalgebra, Parity, SuperBasis, SuperElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("only even cocycles define central extensions")]
    OddCocycle,
    #[error("cochain is not homogeneous")]
    Inhomogeneous,
    #[error("not a restricted cocycle: {0}")]
    NotACocycle(CocycleViolation),
    #[error("not an ordinary cocycle")]
    NotAnOrdinaryCocycle,
    #[error("catalogs exist only for the two Heisenberg families")]
    NotAFamily,
}

#[derive(Clone, Debug)]
pub struct ExtensionResult {
    pub extended: RestrictedSuperalgebra,
    /// Index of the new generator `c` (the last even basis vector).
    pub center: usize,
    pub cocycle: RestrictedCochain2,
}

impl ExtensionResult {
    /// `c` is central and `c^[p] = 0`.
    pub fn center_ok(&self) -> bool {
        let alg = self.extended.algebra();
        let c = alg.basis_element(self.center);
        (0..alg.dim()).all(|i| alg.bracket(&c, &alg.basis_element(i)).expect("basis").is_zero())
            && self.extended.image(self.center).is_zero()
    }

    /// Both validators pass on the extended algebra.
    pub fn validates(&self) -> bool {
        self.extended.algebra().validate().all_passed() && self.extended.validate().all_passed()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitKind {
    Split,
    NonSplit,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: SplitKind,
    pub extension: ExtensionResult,
}

fn fresh_label(basis: &SuperBasis) -> String {
    std::iter::once("c".to_string())
        .chain((1..).map(|i| format!("c{i}")))
        .find(|l| basis.index_of(l).is_none())
        .expect("unbounded supply")
}

fn ensure_even_cocycle(rc: &RestrictedComplex, z: &RestrictedCochain2) -> Result<(), ExtensionError> {
    rc.check_cocycle(z).map_err(ExtensionError::NotACocycle)?;
    match rc.parity_of(z) {
        Some(Parity::Odd) => Err(ExtensionError::OddCocycle),
        None if z.to_coords().iter().any(|&x| x != 0) => Err(ExtensionError::Inhomogeneous),
        _ => Ok(()),
    }
}

/// Builds the extension attached to an even restricted cocycle `z`.
pub fn central_extension(r: &RestrictedSuperalgebra, z: &RestrictedCochain2) -> Result<ExtensionResult, ExtensionError> {
    let rc = RestrictedComplex::new(r);
    ensure_even_cocycle(&rc, z)?;
    let alg = r.algebra();
    let f = alg.field();
    let m = alg.even_dim();
    let d = alg.dim();
    let mut even = alg.basis().even_labels().to_vec();
    even.push(fresh_label(alg.basis()));
    let basis = SuperBasis::new(even, alg.basis().odd_labels().to_vec()).expect("fresh label");
    let shift = |i: usize| if i < m { i } else { i + 1 };
    let center = m;
    let big = d + 1;

    let mut ext = LieSuperalgebra::abelian(f, basis);
    for a in 0..d {
        for b in 0..d {
            let mut v = vec![0; big];
            for (k, &x) in alg.basis_bracket(a, b).iter().enumerate() {
                v[shift(k)] = x;
            }
            v[center] = rc.ordinary().eval2_basis(&z.phi, a, b);
            ext.set_bracket(shift(a), shift(b), &v).expect("in range");
        }
    }
    let mut images = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut v = vec![0; big];
        for (k, &x) in r.image(i).coords().iter().enumerate() {
            v[shift(k)] = x;
        }
        // omega(e_i) = frob_i, since tilde(phi) vanishes on the basis
        v[center] = z.frob.coords()[i];
        images.push(SuperElement::from_coords(v));
    }
    images.push(SuperElement::zero(big));
    let extended = RestrictedSuperalgebra::new(ext, images).expect("even images");
    Ok(ExtensionResult {
        extended,
        center,
        cocycle: z.clone(),
    })
}

/// Whether the ordinary extension splits, i.e. `phi` is a coboundary.
pub fn is_split_ordinary(complex: &CochainComplex, phi: &Cochain2) -> Result<bool, ExtensionError> {
    if !complex.d2(phi).is_zero() {
        return Err(ExtensionError::NotAnOrdinaryCocycle);
    }
    Ok(complex.d1_matrix().solve(phi.coords()).expect("C^2 length").is_some())
}

fn difference(rc: &RestrictedComplex, z1: &RestrictedCochain2, z2: &RestrictedCochain2) -> RestrictedCochain2 {
    let v = rc.field().sub_vec(&z2.to_coords(), &z1.to_coords());
    RestrictedCochain2::from_coords(rc.phi_len(), &v)
}

/// Whether `z1` and `z2` define the same class in `H^2_res`.
pub fn cocycles_equivalent(
    rc: &RestrictedComplex,
    z1: &RestrictedCochain2,
    z2: &RestrictedCochain2,
) -> Result<bool, ExtensionError> {
    ensure_even_cocycle(rc, z1)?;
    ensure_even_cocycle(rc, z2)?;
    Ok(rc.is_res_coboundary(&difference(rc, z1, z2)))
}

/// A `psi` with `z2 - z1 = d^1_res(psi)`, if one exists.
pub fn equivalence_witness(
    rc: &RestrictedComplex,
    z1: &RestrictedCochain2,
    z2: &RestrictedCochain2,
) -> Option<Cochain1> {
    let diff = difference(rc, z1, z2);
    rc.d1_res_matrix()
        .solve(&diff.to_coords())
        .expect("C^2_res length")
        .map(Cochain1::from_coords)
}

/// Checks that `g + alpha c -> g + (alpha + psi(g)) c` is a restricted
/// isomorphism from `first.extended` to `second.extended`.
pub fn transports(first: &ExtensionResult, second: &ExtensionResult, psi: &Cochain1) -> bool {
    let a1 = first.extended.algebra();
    let a2 = second.extended.algebra();
    if a1.dim() != a2.dim() || first.center != second.center {
        return false;
    }
    let f = a1.field();
    let c = first.center;
    let big = a1.dim();
    // psi is indexed by the basis of the base algebra
    let unshift = |i: usize| if i < c { Some(i) } else if i == c { None } else { Some(i - 1) };
    let mut t = FpMatrix::identity(f, big);
    for i in 0..big {
        if let Some(j) = unshift(i) {
            t.set(c, i, psi.coords()[j]);
        }
    }
    let apply = |g: &SuperElement| SuperElement::from_coords(t.mul_vec(g.coords()).expect("dim"));
    for a in 0..big {
        for b in 0..big {
            let lhs = apply(&a1.bracket(&a1.basis_element(a), &a1.basis_element(b)).expect("basis"));
            let rhs = a2
                .bracket(&apply(&a1.basis_element(a)), &apply(&a1.basis_element(b)))
                .expect("basis");
            if lhs != rhs {
                return false;
            }
        }
    }
    (0..a1.even_dim()).all(|i| {
        let lhs = apply(first.extended.image(i));
        let rhs = second.extended.p_power(&apply(&a1.basis_element(i))).expect("even");
        lhs == rhs
    })
}

/// The named extensions of a family member: `H_i` from `(0, ebar^i)`,
/// `X_{s,t}` from `x^{s,t}` and `Y_{k,l}` from `y^{k,l}`, over index ranges
/// giving one cocycle per basis class of the even part of `H^2_res`.
pub fn extension_catalog(r: &RestrictedSuperalgebra) -> Result<Vec<CatalogEntry>, ExtensionError> {
    let rc = RestrictedComplex::new(r);
    let w = rc.ordinary().wedge2();
    let (m, n2) = (r.algebra().even_dim(), rc.phi_len());
    let phi_unit = |i: usize, j: usize| {
        let mut v = vec![0; n2 + m];
        v[w.index_of(i, j).expect("canonical pair")] = 1;
        v
    };
    let mut named: Vec<(String, Vec<u32>)> = (0..m)
        .map(|i| {
            let mut v = vec![0; n2 + m];
            v[n2 + i] = 1;
            (format!("H_{}", i + 1), v)
        })
        .collect();
    let (x_max, y_start, y_pairs): (usize, usize, Vec<(usize, usize)>) = match recognize_family(r) {
        Some(FamilyKind::HeisenbergEven { m: half, n, .. }) => {
            let mut pairs = Vec::new();
            for k in 0..n {
                for l in k..n {
                    if k == l && k + 1 == n {
                        continue;
                    }
                    pairs.push((k, l));
                }
            }
            (2 * half, m, pairs)
        }
        Some(FamilyKind::HeisenbergOdd { n }) => {
            let pairs = (0..n).flat_map(|k| (k..n).map(move |l| (k, l))).collect();
            (n, m, pairs)
        }
        None => return Err(ExtensionError::NotAFamily),
    };
    for s in 0..x_max {
        for t in s + 1..x_max {
            named.push((format!("X_{{{},{}}}", s + 1, t + 1), phi_unit(s, t)));
        }
    }
    for (k, l) in y_pairs {
        named.push((format!("Y_{{{},{}}}", k + 1, l + 1), phi_unit(y_start + k, y_start + l)));
    }

    named
        .into_iter()
        .map(|(name, v)| {
            let z = RestrictedCochain2::from_coords(n2, &v);
            let split = is_split_ordinary(rc.ordinary(), &z.phi)?;
            Ok(CatalogEntry {
                name,
                kind: if split { SplitKind::Split } else { SplitKind::NonSplit },
                extension: central_extension(r, &z)?,
            })
        })
        .collect()
}
