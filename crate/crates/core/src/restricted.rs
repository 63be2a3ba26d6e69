//! `[p]`-operators on the even part of a Lie superalgebra.
//!
//! A [`POperator`] is stored by the images of the even basis vectors. It is
//! extended to arbitrary even elements by peeling one basis term at a time
//! with the semilinearity rule `(a g)^[p] = a^p g^[p]` and Jacobson's
//! additivity formula `(g+h)^[p] = g^[p] + h^[p] + sum_i s_i(g, h)`.

use serde::Serialize;
use thiserror::Error;

use crate::field::PrimeField;
use crate::linalg::FpMatrix;
use crate::superalgebra::{AlgebraError, LieSuperalgebra, SuperElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RestrictedError {
    #[error("expected {expected} [p]-images (one per even basis vector), found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("[p]-image of even basis vector {0} has an odd component")]
    OddImage(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Coefficients `s_1, ..., s_{p-1}` with `i s_i` the coefficient of
/// `t^{i-1}` in `(ad(t g + h))^{p-1}(g)`.
pub fn s_coefficients(
    algebra: &LieSuperalgebra,
    g: &SuperElement,
    h: &SuperElement,
) -> Result<Vec<SuperElement>, AlgebraError> {
    for x in [g, h] {
        if x.len() != algebra.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: algebra.dim(),
                found: x.len(),
            });
        }
        if !algebra.is_even(x) {
            return Err(AlgebraError::NotEven);
        }
    }
    let f = algebra.field();
    let p = f.characteristic() as usize;
    let d = algebra.dim();
    // poly[k] is the coefficient of t^k
    let mut poly: Vec<Vec<u32>> = vec![g.coords().to_vec()];
    for _ in 0..p - 1 {
        let mut next = vec![vec![0; d]; poly.len() + 1];
        for (k, coeff) in poly.iter().enumerate() {
            if coeff.iter().all(|&c| c == 0) {
                continue;
            }
            let from_h = algebra.bracket_coords(h.coords(), coeff);
            let from_g = algebra.bracket_coords(g.coords(), coeff);
            next[k] = f.add_vec(&next[k], &from_h);
            next[k + 1] = f.add_vec(&next[k + 1], &from_g);
        }
        poly = next;
    }
    Ok((1..p)
        .map(|i| {
            // 1 <= i <= p-1, so i is a unit mod p
            let inv = f.inv(i as u32).expect("i < p is invertible");
            SuperElement::from_coords(f.scale(inv, &poly[i - 1]))
        })
        .collect())
}

/// Images `e_i^[p]` of the even basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct POperator {
    images: Vec<SuperElement>,
}

impl POperator {
    pub fn images(&self) -> &[SuperElement] {
        &self.images
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(SuperElement::is_zero)
    }
}

/// A Lie superalgebra together with a `[p]`-operator on its even part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedSuperalgebra {
    algebra: LieSuperalgebra,
    p_map: POperator,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// 0-based basis indices, plus the scalar for the semilinearity check.
    pub indices: Vec<usize>,
    pub scalar: Option<u32>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictednessReport {
    pub axiom1_ok: bool,
    pub axiom1_counterexample: Option<Counterexample>,
    pub axiom2_ok: bool,
    pub axiom2_counterexample: Option<Counterexample>,
    pub axiom3_ok: bool,
    pub axiom3_counterexample: Option<Counterexample>,
    pub odd_module_ok: bool,
    pub odd_module_counterexample: Option<Counterexample>,
}

impl RestrictednessReport {
    pub fn all_passed(&self) -> bool {
        self.axiom1_ok && self.axiom2_ok && self.axiom3_ok && self.odd_module_ok
    }
}

impl RestrictedSuperalgebra {
    pub fn new(algebra: LieSuperalgebra, images: Vec<SuperElement>) -> Result<Self, RestrictedError> {
        let m = algebra.even_dim();
        if images.len() != m {
            return Err(RestrictedError::ImageCount {
                expected: m,
                found: images.len(),
            });
        }
        let p = algebra.field().characteristic();
        let mut reduced = Vec::with_capacity(m);
        for (i, img) in images.into_iter().enumerate() {
            if img.len() != algebra.dim() {
                return Err(AlgebraError::DimensionMismatch {
                    expected: algebra.dim(),
                    found: img.len(),
                }
                .into());
            }
            let img = SuperElement::from_coords(img.coords().iter().map(|&c| c % p).collect());
            if !algebra.is_even(&img) {
                return Err(RestrictedError::OddImage(i));
            }
            reduced.push(img);
        }
        Ok(Self {
            algebra,
            p_map: POperator { images: reduced },
        })
    }

    /// The zero `[p]`-operator.
    pub fn with_zero_map(algebra: LieSuperalgebra) -> Self {
        let images = vec![SuperElement::zero(algebra.dim()); algebra.even_dim()];
        Self {
            algebra,
            p_map: POperator { images },
        }
    }

    pub fn algebra(&self) -> &LieSuperalgebra {
        &self.algebra
    }

    pub fn p_operator(&self) -> &POperator {
        &self.p_map
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    pub fn image(&self, i: usize) -> &SuperElement {
        &self.p_map.images[i]
    }

    /// `g^[p]`, peeling basis terms in index order.
    pub fn p_power(&self, g: &SuperElement) -> Result<SuperElement, AlgebraError> {
        let order: Vec<usize> = (0..self.algebra.even_dim()).collect();
        self.p_power_in_order(g, &order)
    }

    /// `g^[p]`, peeling the basis terms of `g` in the given order. The
    /// accumulated prefix is the left operand of the additivity rule and the
    /// next term the right one. Indices missing from `order` are ignored.
    pub fn p_power_in_order(&self, g: &SuperElement, order: &[usize]) -> Result<SuperElement, AlgebraError> {
        let alg = &self.algebra;
        if g.len() != alg.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: alg.dim(),
                found: g.len(),
            });
        }
        if !alg.is_even(g) {
            return Err(AlgebraError::NotEven);
        }
        let f = alg.field();
        let d = alg.dim();
        let mut prefix = SuperElement::zero(d);
        let mut power = SuperElement::zero(d);
        for &i in order {
            let a = g.coords()[i];
            if a == 0 {
                continue;
            }
            let term = alg.basis_element(i).scale(f, a);
            let term_power = self.p_map.images[i].scale(f, f.frobenius(a));
            power = power.add(f, &term_power);
            if !prefix.is_zero() {
                for s in s_coefficients(alg, &prefix, &term)? {
                    power = power.add(f, &s);
                }
            }
            prefix = prefix.add(f, &term);
        }
        Ok(power)
    }

    pub fn validate(&self) -> RestrictednessReport {
        let (axiom1_ok, axiom1_counterexample) = split(self.check_semilinearity());
        let (axiom2_ok, axiom2_counterexample) = split(self.check_additivity());
        let (axiom3_ok, axiom3_counterexample, odd_module_ok, odd_module_counterexample) =
            self.check_ad_powers();
        RestrictednessReport {
            axiom1_ok,
            axiom1_counterexample,
            axiom2_ok,
            axiom2_counterexample,
            axiom3_ok,
            axiom3_counterexample,
            odd_module_ok,
            odd_module_counterexample,
        }
    }

    fn check_semilinearity(&self) -> Option<Counterexample> {
        let f = self.field();
        let p = f.characteristic();
        let mut panel = vec![0, 1, 2 % p, p - 1];
        panel.dedup();
        for i in 0..self.algebra.even_dim() {
            let e = self.algebra.basis_element(i);
            let base = self.p_power(&e).expect("basis vector is even");
            for &a in &panel {
                let lhs = self.p_power(&e.scale(f, a)).expect("even");
                let rhs = base.scale(f, f.frobenius(a));
                if lhs != rhs {
                    return Some(Counterexample {
                        indices: vec![i],
                        scalar: Some(a),
                        detail: format!("(a e)^[p] != a^p e^[p] for a = {a}"),
                    });
                }
            }
        }
        None
    }

    /// Additivity on all ordered even basis pairs. The left side is the
    /// evaluator applied to `e_i + e_j` (which peels in index order), the
    /// right side the formula with `g = e_i`, `h = e_j`; for `i > j` the two
    /// sides take different routes.
    fn check_additivity(&self) -> Option<Counterexample> {
        let f = self.field();
        let alg = &self.algebra;
        for i in 0..alg.even_dim() {
            for j in 0..alg.even_dim() {
                let g = alg.basis_element(i);
                let h = alg.basis_element(j);
                let lhs = self.p_power(&g.add(f, &h)).expect("even");
                let mut rhs = self.image(i).add(f, self.image(j));
                for s in s_coefficients(alg, &g, &h).expect("even") {
                    rhs = rhs.add(f, &s);
                }
                if lhs != rhs {
                    return Some(Counterexample {
                        indices: vec![i, j],
                        scalar: None,
                        detail: format!(
                            "({} + {})^[p] disagrees with the additivity formula",
                            alg.basis().label(i),
                            alg.basis().label(j)
                        ),
                    });
                }
            }
        }
        None
    }

    /// `(ad e_i)^p = ad(e_i^[p])`, split into the even block (restricted Lie
    /// algebra axiom) and the odd block (restricted module condition).
    fn check_ad_powers(&self) -> (bool, Option<Counterexample>, bool, Option<Counterexample>) {
        let alg = &self.algebra;
        let p = self.field().characteristic();
        let m = alg.even_dim();
        let d = alg.dim();
        let mut even_fail = None;
        let mut odd_fail = None;
        for i in 0..m {
            let lhs = alg.ad_matrix(&alg.basis_element(i)).expect("basis").pow(p);
            let rhs = alg.ad_matrix(self.image(i)).expect("image has algebra length");
            if even_fail.is_none() {
                if let Some((r, c)) = first_difference(&lhs, &rhs, 0..m) {
                    even_fail = Some(Counterexample {
                        indices: vec![i, c, r],
                        scalar: None,
                        detail: format!(
                            "(ad {})^p != ad({}^[p]) on the even part",
                            alg.basis().label(i),
                            alg.basis().label(i)
                        ),
                    });
                }
            }
            if odd_fail.is_none() {
                if let Some((r, c)) = first_difference(&lhs, &rhs, m..d) {
                    odd_fail = Some(Counterexample {
                        indices: vec![i, c, r],
                        scalar: None,
                        detail: format!(
                            "{} acts on the odd part with (ad)^p != ad of its [p]-image",
                            alg.basis().label(i)
                        ),
                    });
                }
            }
        }
        (even_fail.is_none(), even_fail, odd_fail.is_none(), odd_fail)
    }
}

fn split(c: Option<Counterexample>) -> (bool, Option<Counterexample>) {
    (c.is_none(), c)
}

fn first_difference(a: &FpMatrix, b: &FpMatrix, block: std::ops::Range<usize>) -> Option<(usize, usize)> {
    for c in block.clone() {
        for r in block.clone() {
            if a.get(r, c) != b.get(r, c) {
                return Some((r, c));
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JacobsonOutcome {
    /// One even `z_i` per even basis vector with `ad z_i = (ad e_i)^p`.
    Restrictable { witnesses: Vec<SuperElement> },
    /// `(ad e_i)^p` is not inner for this even index.
    NotRestrictable { index: usize },
}

impl JacobsonOutcome {
    pub fn is_restrictable(&self) -> bool {
        matches!(self, JacobsonOutcome::Restrictable { .. })
    }
}

/// Restrictability test: every `(ad e_i)^p` must be `ad z` for an even `z`.
pub fn jacobson_check(algebra: &LieSuperalgebra) -> JacobsonOutcome {
    let f = algebra.field();
    let p = f.characteristic();
    let m = algebra.even_dim();
    let d = algebra.dim();
    let flatten = |mat: &FpMatrix| -> Vec<u32> { (0..d).flat_map(|r| mat.row(r).to_vec()).collect() };
    let columns: Vec<Vec<u32>> = (0..m)
        .map(|j| flatten(&algebra.ad_matrix(&algebra.basis_element(j)).expect("basis")))
        .collect();
    let system = FpMatrix::from_columns(f, d * d, &columns).expect("uniform length");
    let mut witnesses = Vec::with_capacity(m);
    for i in 0..m {
        let target = flatten(&algebra.ad_matrix(&algebra.basis_element(i)).expect("basis").pow(p));
        match system.solve(&target).expect("uniform length") {
            Some(z) => {
                let mut coords = z;
                coords.resize(d, 0);
                witnesses.push(SuperElement::from_coords(coords));
            }
            None => return JacobsonOutcome::NotRestrictable { index: i },
        }
    }
    JacobsonOutcome::Restrictable { witnesses }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalgebra::SuperBasis;

    fn field(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// Even 2-dim algebra with [e1, e2] = e2.
    fn solvable(p: u32) -> LieSuperalgebra {
        let mut a = LieSuperalgebra::abelian(field(p), SuperBasis::generic(2, 0));
        a.set_bracket_skew(0, 1, &[0, 1]).unwrap();
        a
    }

    #[test]
    fn s_coefficients_abelian_vanish() {
        let a = LieSuperalgebra::abelian(field(5), SuperBasis::generic(3, 1));
        let s = s_coefficients(&a, &a.basis_element(0), &a.basis_element(1)).unwrap();
        assert_eq!(s.len(), 4);
        assert!(s.iter().all(SuperElement::is_zero));
    }

    #[test]
    fn s_coefficients_solvable_over_f3() {
        // (ad(t e1 + e2))^2 (e1) = -t e2, so s1 = 0 and s2 = -(2^{-1}) e2 = e2
        let a = solvable(3);
        let s = s_coefficients(&a, &a.basis_element(0), &a.basis_element(1)).unwrap();
        assert_eq!(s, vec![SuperElement::zero(2), a.basis_element(1)]);
    }

    #[test]
    fn s_coefficients_reject_odd() {
        let a = LieSuperalgebra::abelian(field(3), SuperBasis::generic(1, 1));
        assert_eq!(
            s_coefficients(&a, &a.basis_element(1), &a.basis_element(0)),
            Err(AlgebraError::NotEven)
        );
    }

    #[test]
    fn solvable_restricted_structure() {
        for p in [3, 5, 7] {
            let a = solvable(p);
            let r = RestrictedSuperalgebra::new(a.clone(), vec![a.basis_element(0), SuperElement::zero(2)]).unwrap();
            assert!(r.validate().all_passed(), "p = {p}");
            let bad = RestrictedSuperalgebra::new(a.clone(), vec![SuperElement::zero(2), SuperElement::zero(2)]).unwrap();
            let report = bad.validate();
            assert!(!report.axiom3_ok);
            assert!(report.odd_module_ok);
        }
    }

    #[test]
    fn p_power_of_zero_and_semilinear() {
        let a = solvable(5);
        let r = RestrictedSuperalgebra::new(a.clone(), vec![a.basis_element(0), SuperElement::zero(2)]).unwrap();
        assert!(r.p_power(&SuperElement::zero(2)).unwrap().is_zero());
        let f = a.field();
        let g = a.basis_element(0).scale(f, 3);
        assert_eq!(r.p_power(&g).unwrap(), a.basis_element(0).scale(f, f.frobenius(3)));
    }

    #[test]
    fn odd_images_rejected() {
        let a = LieSuperalgebra::abelian(field(3), SuperBasis::generic(1, 1));
        assert_eq!(
            RestrictedSuperalgebra::new(a.clone(), vec![a.basis_element(1)]),
            Err(RestrictedError::OddImage(0))
        );
        assert_eq!(
            RestrictedSuperalgebra::new(a, vec![]),
            Err(RestrictedError::ImageCount { expected: 1, found: 0 })
        );
    }

    #[test]
    fn abelian_semilinear_images_pass() {
        let a = LieSuperalgebra::abelian(field(7), SuperBasis::generic(2, 2));
        let images = vec![a.element(vec![3, 1, 0, 0]).unwrap(), a.element(vec![0, 5, 0, 0]).unwrap()];
        let r = RestrictedSuperalgebra::new(a, images).unwrap();
        assert!(r.validate().all_passed());
    }

    #[test]
    fn jacobson_on_small_algebras() {
        let a = LieSuperalgebra::abelian(field(3), SuperBasis::generic(2, 1));
        match jacobson_check(&a) {
            JacobsonOutcome::Restrictable { witnesses } => assert!(witnesses.iter().all(SuperElement::is_zero)),
            other => panic!("{other:?}"),
        }
        let s = solvable(5);
        match jacobson_check(&s) {
            JacobsonOutcome::Restrictable { witnesses } => {
                assert_eq!(witnesses, vec![s.basis_element(0), SuperElement::zero(2)])
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn jacobson_detects_non_restrictable() {
        // three-dim even algebra [e1,e2] = e2 + e3, [e1,e3] = e3: ad e1 acts
        // as a Jordan block on <e2,e3>, whose p-th power is not inner.
        let mut a = LieSuperalgebra::abelian(field(3), SuperBasis::generic(3, 0));
        a.set_bracket_skew(0, 1, &[0, 1, 1]).unwrap();
        a.set_bracket_skew(0, 2, &[0, 0, 1]).unwrap();
        assert!(a.validate().all_passed());
        assert_eq!(jacobson_check(&a), JacobsonOutcome::NotRestrictable { index: 0 });
    }
}
