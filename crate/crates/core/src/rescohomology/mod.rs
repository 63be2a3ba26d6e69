//! Restricted cochains and restricted cohomology in degrees 1 and 2.
//!
//! A restricted 2-cochain `(phi, omega)` is stored as `phi` together with the
//! Frobenius part `f = omega - tilde(phi)`, where `tilde(phi)` is the unique
//! `phi`-compatible map vanishing on the even basis. The coordinates of
//! `C^2_res` are therefore the [`WedgeBasis2`] coordinates followed by one
//! coordinate per even basis vector.

mod sixterm;

pub use sixterm::{SixTermDims, SixTermError, SixTermMaps, SixTermRanks, SixTermReport};

use serde::Serialize;
use thiserror::Error;

use crate::cochain::{self, Cochain1, Cochain2, Cochain3, CochainComplex, CohomologyReport, WedgeBasis2};
use crate::field::PrimeField;
use crate::graded::{vector_parity, GradedQuotient};
use crate::linalg::FpMatrix;
use crate::restricted::RestrictedSuperalgebra;
use crate::superalgebra::{AlgebraError, Parity, SuperElement};

/// `f = sum f_i ebar^i` with `ebar^i(sum a_j e_j) = a_i^p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusMap {
    coords: Vec<u32>,
}

impl FrobeniusMap {
    pub fn from_coords(coords: Vec<u32>) -> Self {
        Self { coords }
    }

    pub fn zero(m: usize) -> Self {
        Self { coords: vec![0; m] }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Value on an even element (only the first `m` coordinates of `g` are read).
    pub fn eval(&self, field: PrimeField, g: &SuperElement) -> u32 {
        self.coords
            .iter()
            .zip(g.coords())
            .fold(0, |acc, (&f, &a)| field.add(acc, field.mul(f, field.frobenius(a))))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RestrictedCochain2 {
    pub phi: Cochain2,
    pub frob: FrobeniusMap,
}

impl RestrictedCochain2 {
    pub fn new(phi: Cochain2, frob: FrobeniusMap) -> Self {
        Self { phi, frob }
    }

    /// Splits a `C^2_res` coordinate vector after `phi_len` coordinates.
    pub fn from_coords(phi_len: usize, coords: &[u32]) -> Self {
        Self {
            phi: Cochain2::from_coords(coords[..phi_len].to_vec()),
            frob: FrobeniusMap::from_coords(coords[phi_len..].to_vec()),
        }
    }

    pub fn to_coords(&self) -> Vec<u32> {
        let mut v = self.phi.coords().to_vec();
        v.extend_from_slice(self.frob.coords());
        v
    }
}

/// `(zeta, eta)`; `eta` is recorded by its values on basis pairs
/// `(e_a, e_j)`, `j` even, at `eta[a * m + j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedCochain3 {
    pub zeta: Cochain3,
    pub eta: Vec<u32>,
}

impl RestrictedCochain3 {
    pub fn is_zero(&self) -> bool {
        self.zeta.is_zero() && self.eta.iter().all(|&x| x == 0)
    }
}

/// The first condition a restricted 2-cochain fails to satisfy.
#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum CocycleViolation {
    #[error("d2(phi) is nonzero on ({}, {}, {})", triple[0], triple[1], triple[2])]
    D2 { triple: [String; 3] },
    #[error("ind2(phi) is nonzero on ({left}, {right}): {value}")]
    Ind2 { left: String, right: String, value: u32 },
    #[error("cochain has {found} coordinates, expected {expected}")]
    Length { expected: usize, found: usize },
}

/// The restricted complex `C^1 -> C^2_res -> C^3_res` of a restricted
/// Lie superalgebra.
#[derive(Clone, Debug)]
pub struct RestrictedComplex<'a> {
    restricted: &'a RestrictedSuperalgebra,
    ordinary: CochainComplex<'a>,
    d1_res: FpMatrix,
    /// `d^2` rows (padded with zero Frobenius columns) followed by the
    /// `ind^2` rows on basis pairs.
    d2_res: FpMatrix,
}

impl<'a> RestrictedComplex<'a> {
    pub fn new(restricted: &'a RestrictedSuperalgebra) -> Self {
        let alg = restricted.algebra();
        let ordinary = CochainComplex::new(alg);
        let f = alg.field();
        let p = f.characteristic() as usize;
        let d = alg.dim();
        let m = alg.even_dim();
        let n2 = ordinary.wedge2().len();

        let mut d1_res = FpMatrix::zeros(f, n2 + m, d);
        for k in 0..d {
            for r in 0..n2 {
                d1_res.set(r, k, ordinary.d1_matrix().get(r, k));
            }
            for i in 0..m {
                d1_res.set(n2 + i, k, restricted.image(i).coords()[k]);
            }
        }

        let d2 = ordinary.d2_matrix();
        let mut d2_res = FpMatrix::zeros(f, d2.rows() + d * m, n2 + m);
        for r in 0..d2.rows() {
            for c in 0..n2 {
                d2_res.set(r, c, d2.get(r, c));
            }
        }
        let wedge2 = ordinary.wedge2();
        for a in 0..d {
            for j in 0..m {
                let row = ind2_row(f, wedge2, restricted, p, a, j);
                for (c, x) in row.into_iter().enumerate() {
                    d2_res.set(d2.rows() + a * m + j, c, x);
                }
            }
        }

        Self {
            restricted,
            ordinary,
            d1_res,
            d2_res,
        }
    }

    pub fn restricted(&self) -> &'a RestrictedSuperalgebra {
        self.restricted
    }

    pub fn ordinary(&self) -> &CochainComplex<'a> {
        &self.ordinary
    }

    pub fn field(&self) -> PrimeField {
        self.restricted.field()
    }

    pub fn phi_len(&self) -> usize {
        self.ordinary.wedge2().len()
    }

    pub fn c2_res_dim(&self) -> usize {
        self.phi_len() + self.restricted.algebra().even_dim()
    }

    /// `d^1_res` as a `dim C^2_res x dim C^1` matrix.
    pub fn d1_res_matrix(&self) -> &FpMatrix {
        &self.d1_res
    }

    /// Joint matrix whose kernel is `Z^2_res`.
    pub fn d2_res_matrix(&self) -> &FpMatrix {
        &self.d2_res
    }

    pub fn c2_res_parities(&self) -> Vec<Parity> {
        let mut v = self.ordinary.wedge2().parities().to_vec();
        v.extend(std::iter::repeat_n(Parity::Even, self.restricted.algebra().even_dim()));
        v
    }

    /// Parity of a homogeneous nonzero restricted cochain.
    pub fn parity_of(&self, z: &RestrictedCochain2) -> Option<Parity> {
        vector_parity(&self.c2_res_parities(), &z.to_coords())
    }

    /// `tilde(phi)(g)`: peel the basis terms of `g` in index order, adding
    /// the correction sum of the additivity rule at each step.
    pub fn tilde_eval(&self, phi: &Cochain2, g: &SuperElement) -> Result<u32, AlgebraError> {
        let alg = self.restricted.algebra();
        if g.len() != alg.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: alg.dim(),
                found: g.len(),
            });
        }
        if !alg.is_even(g) {
            return Err(AlgebraError::NotEven);
        }
        let f = self.field();
        let mut prefix = SuperElement::zero(alg.dim());
        let mut value = 0;
        for i in 0..alg.even_dim() {
            let a = g.coords()[i];
            if a == 0 {
                continue;
            }
            let term = alg.basis_element(i).scale(f, a);
            if !prefix.is_zero() {
                value = f.add(value, self.compatibility_correction(phi, &prefix, &term)?);
            }
            prefix = prefix.add(f, &term);
        }
        Ok(value)
    }

    /// `sum (1/#g) phi([g_1, ..., g_{p-1}] ^ g_p)` over sequences with
    /// `g_1 = g`, `g_2 = h` and the remaining entries in `{g, h}`.
    pub fn compatibility_correction(
        &self,
        phi: &Cochain2,
        g: &SuperElement,
        h: &SuperElement,
    ) -> Result<u32, AlgebraError> {
        let alg = self.restricted.algebra();
        let f = self.field();
        let p = f.characteristic() as usize;
        let free = p - 2;
        let mut total = 0;
        for mask in 0u32..(1 << free) {
            let mut seq = vec![g.clone(), h.clone()];
            for bit in 0..free {
                seq.push(if mask >> bit & 1 == 1 { h.clone() } else { g.clone() });
            }
            let count_g = 1 + (0..free).filter(|&bit| mask >> bit & 1 == 0).count() as u32;
            let last = seq.pop().expect("p >= 3");
            let br = alg.n_fold_bracket(&seq)?;
            let v = self.ordinary.eval2(phi, &br, &last);
            if v != 0 {
                let inv = f.inv(count_g % f.characteristic()).expect("count below p");
                total = f.add(total, f.mul(inv, v));
            }
        }
        Ok(total)
    }

    /// `omega(g) = tilde(phi)(g) + f(g)`.
    pub fn omega(&self, z: &RestrictedCochain2, g: &SuperElement) -> Result<u32, AlgebraError> {
        let f = self.field();
        Ok(f.add(self.tilde_eval(&z.phi, g)?, z.frob.eval(f, g)))
    }

    /// `ind^1(psi)` on the even basis: `psi(e_i^[p])`.
    pub fn ind1(&self, psi: &Cochain1) -> Vec<u32> {
        let f = self.field();
        (0..self.restricted.algebra().even_dim())
            .map(|i| f.dot(psi.coords(), self.restricted.image(i).coords()))
            .collect()
    }

    /// `ind^1(psi)(g) = psi(g^[p])`.
    pub fn ind1_eval(&self, psi: &Cochain1, g: &SuperElement) -> Result<u32, AlgebraError> {
        let gp = self.restricted.p_power(g)?;
        Ok(self.field().dot(psi.coords(), gp.coords()))
    }

    /// `ind^2(phi)(g, h) = phi(g ^ h^[p]) - phi([g, h, ..., h] ^ h)` with
    /// `p - 1` copies of `h` inside the bracket. Independent of `omega`.
    pub fn ind2(&self, phi: &Cochain2, g: &SuperElement, h: &SuperElement) -> Result<u32, AlgebraError> {
        let alg = self.restricted.algebra();
        let f = self.field();
        let hp = self.restricted.p_power(h)?;
        let mut args = vec![g.clone()];
        args.extend(std::iter::repeat_n(h.clone(), f.characteristic() as usize - 1));
        let br = alg.n_fold_bracket(&args)?;
        Ok(f.sub(self.ordinary.eval2(phi, g, &hp), self.ordinary.eval2(phi, &br, h)))
    }

    pub fn d1_res(&self, psi: &Cochain1) -> RestrictedCochain2 {
        let v = self.d1_res.mul_vec(psi.coords()).expect("C^1 length");
        RestrictedCochain2::from_coords(self.phi_len(), &v)
    }

    pub fn d2_res(&self, z: &RestrictedCochain2) -> RestrictedCochain3 {
        let v = self.d2_res.mul_vec(&z.to_coords()).expect("C^2_res length");
        let split = self.ordinary.wedge3().len();
        RestrictedCochain3 {
            zeta: Cochain3::from_coords(v[..split].to_vec()),
            eta: v[split..].to_vec(),
        }
    }

    /// `Ok` iff `z` is a restricted 2-cocycle.
    pub fn check_cocycle(&self, z: &RestrictedCochain2) -> Result<(), CocycleViolation> {
        let coords = z.to_coords();
        if coords.len() != self.c2_res_dim() {
            return Err(CocycleViolation::Length {
                expected: self.c2_res_dim(),
                found: coords.len(),
            });
        }
        let image = self.d2_res(z);
        let basis = self.restricted.algebra().basis();
        if let Some(r) = image.zeta.coords().iter().position(|&x| x != 0) {
            let (u, v, w) = self.ordinary.wedge3().triples()[r];
            return Err(CocycleViolation::D2 {
                triple: [u, v, w].map(|i| basis.label(i).to_string()),
            });
        }
        let m = self.restricted.algebra().even_dim();
        if let Some(r) = image.eta.iter().position(|&x| x != 0) {
            return Err(CocycleViolation::Ind2 {
                left: basis.label(r / m).to_string(),
                right: basis.label(r % m).to_string(),
                value: image.eta[r],
            });
        }
        Ok(())
    }

    pub(crate) fn h1_res_quotient(&self) -> GradedQuotient {
        let alg = self.restricted.algebra();
        let d = alg.dim();
        let mut rows: Vec<Vec<u32>> = (0..self.ordinary.d1_matrix().rows())
            .map(|r| self.ordinary.d1_matrix().row(r).to_vec())
            .collect();
        rows.extend((0..alg.even_dim()).map(|i| self.restricted.image(i).coords().to_vec()));
        let annihilated = FpMatrix::from_rows(self.field(), d, &rows).expect("uniform rows");
        let parities = self.ordinary.c1_parities();
        let preferred: Vec<usize> = (0..d).collect();
        GradedQuotient::compute(self.field(), &parities, &annihilated, &[], &preferred)
    }

    pub(crate) fn h2_res_quotient(&self) -> GradedQuotient {
        let boundaries: Vec<Vec<u32>> = (0..self.d1_res.cols()).map(|c| self.d1_res.column(c)).collect();
        let n2 = self.phi_len();
        // Frobenius directions first, so that `(0, ebar^i)` are kept as
        // representatives whenever they are nonzero classes.
        let preferred: Vec<usize> = (n2..self.c2_res_dim()).chain(0..n2).collect();
        GradedQuotient::compute(
            self.field(),
            &self.c2_res_parities(),
            &self.d2_res,
            &boundaries,
            &preferred,
        )
    }

    /// Basis of `B^2_res = im d^1_res` in `C^2_res` coordinates.
    pub fn b2_res_basis(&self) -> Vec<Vec<u32>> {
        self.h2_res_quotient().all_boundaries()
    }

    /// Basis of `Z^2_res` in `C^2_res` coordinates.
    pub fn z2_res_basis(&self) -> Vec<Vec<u32>> {
        self.h2_res_quotient().all_cocycles()
    }

    /// Basis of `Z^2_res` (even vectors first).
    pub fn d2_res_kernel(&self) -> Vec<RestrictedCochain2> {
        self.h2_res_quotient()
            .all_cocycles()
            .iter()
            .map(|v| RestrictedCochain2::from_coords(self.phi_len(), v))
            .collect()
    }

    /// `H^1_res = (g / ([g, g] + <g_0^[p]>))^*`.
    pub fn h1_res(&self) -> CohomologyReport {
        cochain::report(self.field(), 1, true, &self.h1_res_quotient(), &self.ordinary.c1_names())
    }

    pub fn h2_res(&self) -> CohomologyReport {
        cochain::report(self.field(), 2, true, &self.h2_res_quotient(), &self.c2_res_names())
    }

    pub fn c2_res_names(&self) -> Vec<String> {
        let mut names = self.ordinary.c2_names();
        names.extend(
            self.restricted
                .algebra()
                .basis()
                .even_labels()
                .iter()
                .map(|l| format!("frob:{l}")),
        );
        names
    }

    /// Whether `z` lies in `B^2_res`.
    pub fn is_res_coboundary(&self, z: &RestrictedCochain2) -> bool {
        self.d1_res.solve(&z.to_coords()).expect("C^2_res length").is_some()
    }

    /// Checks, for `phi = d^1 psi`, that `ind^1 psi` is `phi`-compatible
    /// (it agrees with `tilde(phi) + ind^1(psi)|basis` on a panel of even
    /// elements) and that `ind^2(phi)` vanishes on every basis pair.
    pub fn coboundary_swap_property(&self, psi: &Cochain1) -> bool {
        let alg = self.restricted.algebra();
        let f = self.field();
        let z = self.d1_res(psi);
        for g in even_panel(f, alg.dim(), alg.even_dim()) {
            let direct = self.ind1_eval(psi, &g).expect("even panel");
            let via_tilde = self.omega(&z, &g).expect("even panel");
            if direct != via_tilde {
                return false;
            }
        }
        for a in 0..alg.dim() {
            for j in 0..alg.even_dim() {
                let v = self
                    .ind2(&z.phi, &alg.basis_element(a), &alg.basis_element(j))
                    .expect("basis");
                if v != 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// Row of the linear functional `phi -> ind^2(phi)(e_a, e_j)` over
/// `C^2_res` coordinates (the Frobenius columns stay zero).
fn ind2_row(
    f: PrimeField,
    wedge2: &WedgeBasis2,
    restricted: &RestrictedSuperalgebra,
    p: usize,
    a: usize,
    j: usize,
) -> Vec<u32> {
    let alg = restricted.algebra();
    let m = alg.even_dim();
    let mut row = vec![0; wedge2.len() + m];
    for (k, &c) in restricted.image(j).coords().iter().enumerate() {
        if c != 0 {
            cochain::accumulate(f, wedge2, &mut row, c, a, k);
        }
    }
    let mut args = vec![alg.basis_element(a)];
    args.extend(std::iter::repeat_n(alg.basis_element(j), p - 1));
    let br = alg.n_fold_bracket(&args).expect("basis elements");
    for (k, &c) in br.coords().iter().enumerate() {
        if c != 0 {
            cochain::accumulate(f, wedge2, &mut row, f.neg(c), k, j);
        }
    }
    row
}

/// Deterministic even test elements: pairwise sums of basis vectors with
/// coefficients 1 and 2, and a few dense vectors.
pub(crate) fn even_panel(f: PrimeField, dim: usize, m: usize) -> Vec<SuperElement> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for b in [1, 2] {
                let mut v = vec![0; dim];
                v[i] = 1;
                v[j] = f.reduce(b);
                out.push(SuperElement::from_coords(v));
            }
        }
    }
    for seed in 1..4u32 {
        let v: Vec<u32> = (0..dim)
            .map(|i| if i < m { f.reduce(((i as u32 + 1) * (seed * 7 + 3)) as i64) } else { 0 })
            .collect();
        out.push(SuperElement::from_coords(v));
    }
    out
}
