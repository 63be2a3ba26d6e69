//! Chevalley–Eilenberg cochains with trivial coefficients in degrees 1–3.
//!
//! A 2-cochain is a super skew-symmetric bilinear form. Its coordinates are
//! its values on the pairs of [`WedgeBasis2`]; in particular the dual pairing
//! on an odd diagonal pair is normalized as `e^{i,i}(e_i, e_i) = 1`.

use serde::Serialize;

use crate::field::PrimeField;
use crate::graded::{GradedQuotient, SuperDim};
use crate::linalg::FpMatrix;
use crate::superalgebra::{LieSuperalgebra, Parity, SuperBasis, SuperElement};

/// Canonical pairs `(i, j)`: even–even with `i < j`, then even–odd, then
/// odd–odd with `i <= j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeBasis2 {
    dim: usize,
    pairs: Vec<(usize, usize)>,
    parities: Vec<Parity>,
    /// `lookup[a * dim + b]` = (position, sign) with `phi(e_a, e_b) = sign * coord[position]`.
    lookup: Vec<Option<(usize, i64)>>,
}

impl WedgeBasis2 {
    pub fn new(basis: &SuperBasis) -> Self {
        let m = basis.even_dim();
        let d = basis.dim();
        let mut pairs = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                pairs.push((i, j));
            }
        }
        for i in 0..m {
            for j in m..d {
                pairs.push((i, j));
            }
        }
        for i in m..d {
            for j in i..d {
                pairs.push((i, j));
            }
        }
        let mut lookup = vec![None; d * d];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            lookup[i * d + j] = Some((k, 1));
            if i != j {
                let sign = -Parity::koszul(basis.parity(i), basis.parity(j));
                lookup[j * d + i] = Some((k, sign));
            }
        }
        let parities = pairs
            .iter()
            .map(|&(i, j)| basis.parity(i).sum(basis.parity(j)))
            .collect();
        Self {
            dim: d,
            pairs,
            parities,
            lookup,
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    /// Where `phi(e_a, e_b)` is stored and with which sign; `None` for an
    /// even diagonal pair, on which every cochain vanishes.
    #[inline]
    pub fn position(&self, a: usize, b: usize) -> Option<(usize, i64)> {
        self.lookup[a * self.dim + b]
    }

    pub fn index_of(&self, i: usize, j: usize) -> Option<usize> {
        self.pairs.iter().position(|&q| q == (i, j))
    }
}

/// Canonical triples `u <= v <= w` with no repeated even index, grouped by
/// block type (eee, eeo, eoo, ooo) and lexicographic inside each group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeBasis3 {
    triples: Vec<(usize, usize, usize)>,
    parities: Vec<Parity>,
}

impl WedgeBasis3 {
    pub fn new(basis: &SuperBasis) -> Self {
        let d = basis.dim();
        let mut all = Vec::new();
        for u in 0..d {
            for v in u..d {
                for w in v..d {
                    let repeated_even = (u == v && basis.parity(u) == Parity::Even)
                        || (v == w && basis.parity(v) == Parity::Even);
                    if !repeated_even {
                        all.push((u, v, w));
                    }
                }
            }
        }
        let odd_count = |&(u, v, w): &(usize, usize, usize)| {
            [u, v, w].iter().filter(|&&x| basis.parity(x) == Parity::Odd).count()
        };
        all.sort_by_key(|t| (odd_count(t), *t));
        let parities = all
            .iter()
            .map(|&(u, v, w)| basis.parity(u).sum(basis.parity(v)).sum(basis.parity(w)))
            .collect();
        Self {
            triples: all,
            parities,
        }
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn triples(&self) -> &[(usize, usize, usize)] {
        &self.triples
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }
}

macro_rules! cochain_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash)]
        pub struct $name {
            coords: Vec<u32>,
        }

        impl $name {
            pub fn from_coords(coords: Vec<u32>) -> Self {
                Self { coords }
            }

            pub fn zero(len: usize) -> Self {
                Self { coords: vec![0; len] }
            }

            pub fn coords(&self) -> &[u32] {
                &self.coords
            }

            pub fn into_coords(self) -> Vec<u32> {
                self.coords
            }

            pub fn is_zero(&self) -> bool {
                self.coords.iter().all(|&c| c == 0)
            }
        }
    };
}

cochain_type!(
    /// Linear form, coordinates over the dual basis `e^k`.
    Cochain1
);
cochain_type!(
    /// Coordinates over [`WedgeBasis2`].
    Cochain2
);
cochain_type!(
    /// Coordinates over [`WedgeBasis3`].
    Cochain3
);

/// A cohomology class representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRepresentative {
    pub parity: Parity,
    pub coords: Vec<u32>,
    /// Human-readable combination of named coordinates.
    pub expression: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub degree: u8,
    pub restricted: bool,
    pub sdim: SuperDim,
    pub representatives: Vec<ClassRepresentative>,
}

/// The complex `C^1 -> C^2 -> C^3` of an algebra, with both differentials
/// materialized as matrices at construction.
#[derive(Clone, Debug)]
pub struct CochainComplex<'a> {
    algebra: &'a LieSuperalgebra,
    wedge2: WedgeBasis2,
    wedge3: WedgeBasis3,
    d1: FpMatrix,
    d2: FpMatrix,
}

impl<'a> CochainComplex<'a> {
    pub fn new(algebra: &'a LieSuperalgebra) -> Self {
        let wedge2 = WedgeBasis2::new(algebra.basis());
        let wedge3 = WedgeBasis3::new(algebra.basis());
        let f = algebra.field();
        let d = algebra.dim();

        let mut d1 = FpMatrix::zeros(f, wedge2.len(), d);
        for (r, &(i, j)) in wedge2.pairs().iter().enumerate() {
            for (k, &c) in algebra.basis_bracket(i, j).iter().enumerate() {
                d1.set(r, k, c);
            }
        }

        let mut d2 = FpMatrix::zeros(f, wedge3.len(), wedge2.len());
        let par = |i| algebra.parity(i);
        for (r, &(u, v, w)) in wedge3.triples().iter().enumerate() {
            let mut row = vec![0; wedge2.len()];
            // phi([u,v] ^ w) - (-1)^{|w||v|} phi([u,w] ^ v) + (-1)^{|u|(|v|+|w|)} phi([v,w] ^ u)
            let terms = [
                (u, v, w, 1),
                (u, w, v, -Parity::koszul(par(w), par(v))),
                (v, w, u, Parity::koszul(par(u), par(v).sum(par(w)))),
            ];
            for (a, b, c, sign) in terms {
                let sign = f.reduce(sign);
                for (s, &coef) in algebra.basis_bracket(a, b).iter().enumerate() {
                    if coef != 0 {
                        accumulate(f, &wedge2, &mut row, f.mul(sign, coef), s, c);
                    }
                }
            }
            for (k, x) in row.into_iter().enumerate() {
                d2.set(r, k, x);
            }
        }

        Self {
            algebra,
            wedge2,
            wedge3,
            d1,
            d2,
        }
    }

    pub fn algebra(&self) -> &'a LieSuperalgebra {
        self.algebra
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    pub fn wedge2(&self) -> &WedgeBasis2 {
        &self.wedge2
    }

    pub fn wedge3(&self) -> &WedgeBasis3 {
        &self.wedge3
    }

    /// `d^1` as a `|WedgeBasis2| x dim` matrix.
    pub fn d1_matrix(&self) -> &FpMatrix {
        &self.d1
    }

    /// `d^2` as a `|WedgeBasis3| x |WedgeBasis2|` matrix.
    pub fn d2_matrix(&self) -> &FpMatrix {
        &self.d2
    }

    pub fn c1_parities(&self) -> Vec<Parity> {
        (0..self.algebra.dim()).map(|i| self.algebra.parity(i)).collect()
    }

    /// Value of a 1-cochain on an element.
    pub fn eval1(&self, psi: &Cochain1, g: &SuperElement) -> u32 {
        self.field().dot(psi.coords(), g.coords())
    }

    /// `phi(e_a, e_b)` on basis vectors.
    pub fn eval2_basis(&self, phi: &Cochain2, a: usize, b: usize) -> u32 {
        let f = self.field();
        match self.wedge2.position(a, b) {
            Some((k, sign)) => f.mul(f.reduce(sign), phi.coords()[k]),
            None => 0,
        }
    }

    /// Bilinear extension of `phi` to arbitrary elements.
    pub fn eval2(&self, phi: &Cochain2, g: &SuperElement, h: &SuperElement) -> u32 {
        let f = self.field();
        let mut acc = 0;
        for (a, &ga) in g.coords().iter().enumerate() {
            if ga == 0 {
                continue;
            }
            for (b, &hb) in h.coords().iter().enumerate() {
                if hb == 0 {
                    continue;
                }
                acc = f.add(acc, f.mul(f.mul(ga, hb), self.eval2_basis(phi, a, b)));
            }
        }
        acc
    }

    /// Value of a 3-cochain given by the `d^2` formula on arbitrary basis
    /// triples (not only canonical ones).
    pub fn d2_eval(&self, phi: &Cochain2, u: usize, v: usize, w: usize) -> u32 {
        let alg = self.algebra;
        let f = self.field();
        let par = |i| alg.parity(i);
        let e = |i| alg.basis_element(i);
        let uv = alg.bracket(&e(u), &e(v)).expect("basis");
        let uw = alg.bracket(&e(u), &e(w)).expect("basis");
        let vw = alg.bracket(&e(v), &e(w)).expect("basis");
        let t1 = self.eval2(phi, &uv, &e(w));
        let t2 = f.mul(f.reduce(Parity::koszul(par(w), par(v))), self.eval2(phi, &uw, &e(v)));
        let t3 = f.mul(
            f.reduce(Parity::koszul(par(u), par(v).sum(par(w)))),
            self.eval2(phi, &vw, &e(u)),
        );
        f.add(f.sub(t1, t2), t3)
    }

    pub fn d1(&self, psi: &Cochain1) -> Cochain2 {
        Cochain2::from_coords(self.d1.mul_vec(psi.coords()).expect("C^1 length"))
    }

    pub fn d2(&self, phi: &Cochain2) -> Cochain3 {
        Cochain3::from_coords(self.d2.mul_vec(phi.coords()).expect("C^2 length"))
    }

    pub(crate) fn h1_quotient(&self) -> GradedQuotient {
        let parities = self.c1_parities();
        let preferred: Vec<usize> = (0..parities.len()).collect();
        GradedQuotient::compute(self.field(), &parities, &self.d1, &[], &preferred)
    }

    pub(crate) fn h2_quotient(&self) -> GradedQuotient {
        let boundaries: Vec<Vec<u32>> = (0..self.d1.cols()).map(|c| self.d1.column(c)).collect();
        let preferred: Vec<usize> = (0..self.wedge2.len()).collect();
        GradedQuotient::compute(
            self.field(),
            self.wedge2.parities(),
            &self.d2,
            &boundaries,
            &preferred,
        )
    }

    /// Basis of `Z^2 = ker d^2` (even vectors first).
    pub fn z2_basis(&self) -> Vec<Vec<u32>> {
        self.h2_quotient().all_cocycles()
    }

    /// Basis of `B^2 = im d^1` (even vectors first).
    pub fn b2_basis(&self) -> Vec<Vec<u32>> {
        self.h2_quotient().all_boundaries()
    }

    /// Ordinary `H^1` (`= ker d^1`, since `d^0 = 0`) or `H^2`.
    pub fn cohomology(&self, degree: u8) -> CohomologyReport {
        let (q, names) = match degree {
            1 => (self.h1_quotient(), self.c1_names()),
            2 => (self.h2_quotient(), self.c2_names()),
            _ => panic!("only degrees 1 and 2 are supported"),
        };
        report(self.field(), degree, false, &q, &names)
    }

    pub fn c1_names(&self) -> Vec<String> {
        self.algebra.basis().labels().map(|l| format!("{l}*")).collect()
    }

    pub fn c2_names(&self) -> Vec<String> {
        let b = self.algebra.basis();
        self.wedge2
            .pairs()
            .iter()
            .map(|&(i, j)| format!("{}*^{}*", b.label(i), b.label(j)))
            .collect()
    }
}

/// Adds `coef * phi(e_a, e_b)` to a row indexed by 2-cochain coordinates.
pub(crate) fn accumulate(
    f: PrimeField,
    wedge2: &WedgeBasis2,
    row: &mut [u32],
    coef: u32,
    a: usize,
    b: usize,
) {
    if let Some((k, sign)) = wedge2.position(a, b) {
        row[k] = f.add(row[k], f.mul(coef, f.reduce(sign)));
    }
}

pub(crate) fn report(
    f: PrimeField,
    degree: u8,
    restricted: bool,
    q: &GradedQuotient,
    names: &[String],
) -> CohomologyReport {
    CohomologyReport {
        degree,
        restricted,
        sdim: q.sdim(),
        representatives: q
            .reps
            .iter()
            .map(|(parity, v)| ClassRepresentative {
                parity: *parity,
                coords: v.clone(),
                expression: expression(f, v, names),
            })
            .collect(),
    }
}

/// `2 x1*^x2* - y1*^y1*` style rendering of a coordinate vector.
pub fn expression(f: PrimeField, v: &[u32], names: &[String]) -> String {
    let mut out = String::new();
    for (&c, name) in v.iter().zip(names) {
        if c == 0 {
            continue;
        }
        let s = f.signed(c);
        let (sign, mag) = if s < 0 { ("-", -s) } else { ("+", s) };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if mag != 1 {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
