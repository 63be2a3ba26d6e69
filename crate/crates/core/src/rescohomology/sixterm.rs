//! The six-term sequence
//! `0 -> H^1_res -> H^1 -> Hom_Fr(g_0, F) -> H^2_res -> H^2 -> Hom_Fr(g_0, H^1)`
//! materialized as matrices between the representative bases chosen by the
//! cohomology routines.

use serde::Serialize;
use thiserror::Error;

use super::RestrictedComplex;
use crate::cochain::{Cochain1, Cochain2};
use crate::graded::{GradedQuotient, SuperDim};
use crate::linalg::{self, FpMatrix};
use crate::superalgebra::SuperElement;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SixTermError {
    #[error("H is not constant on cosets: nonzero on the coboundary of {0}")]
    HNotWellDefined(String),
    #[error("H_phi({g}) does not land in Z^1 for representative {rep}")]
    HNotInZ1 { rep: usize, g: String },
    #[error("{0} does not map into the cocycles of its target")]
    NotACocycle(&'static str),
}

/// Matrices of `iota_1, D, iota_2, pi, H`; column `k` is the image of the
/// `k`-th representative of the source.
#[derive(Clone, Debug)]
pub struct SixTermMaps {
    pub iota1: FpMatrix,
    pub d: FpMatrix,
    pub iota2: FpMatrix,
    pub pi: FpMatrix,
    pub h: FpMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SixTermDims {
    pub h1_res: SuperDim,
    pub h1: SuperDim,
    pub hom_fr: usize,
    pub h2_res: SuperDim,
    pub h2: SuperDim,
    pub hom_fr_h1: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SixTermRanks {
    pub iota1: usize,
    pub d: usize,
    pub iota2: usize,
    pub pi: usize,
    pub h: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SixTermReport {
    pub dims: SixTermDims,
    pub ranks: SixTermRanks,
    pub iota1_injective: bool,
    pub exact_at_h1: bool,
    pub exact_at_hom_fr: bool,
    pub exact_at_h2_res: bool,
    pub exact_at_h2: bool,
}

impl SixTermReport {
    /// Exactness at the four interior nodes and injectivity of `iota_1`.
    pub fn exact(&self) -> bool {
        self.iota1_injective && self.exact_at_h1 && self.exact_at_hom_fr && self.exact_at_h2_res && self.exact_at_h2
    }

    pub fn d_is_zero(&self) -> bool {
        self.ranks.d == 0
    }

    pub fn h_is_zero(&self) -> bool {
        self.ranks.h == 0
    }
}

fn columns(rows: usize, cols: Vec<Vec<u32>>, field: crate::field::PrimeField) -> FpMatrix {
    FpMatrix::from_columns(field, rows, &cols).expect("uniform column length")
}

fn class_of(q: &GradedQuotient, v: &[u32], what: &'static str) -> Result<Vec<u32>, SixTermError> {
    q.class_coords(v).ok_or(SixTermError::NotACocycle(what))
}

impl RestrictedComplex<'_> {
    /// `h -> phi(g ^ (ad g)^{p-1} h) - phi(g^[p] ^ h)` as a vector over the
    /// dual basis, for `g = e_i`.
    fn h_functional(&self, phi: &Cochain2, i: usize) -> Vec<u32> {
        let alg = self.restricted.algebra();
        let f = self.field();
        let p = f.characteristic();
        let g = alg.basis_element(i);
        let ad = alg.ad_matrix(&g).expect("basis element").pow(p - 1);
        let gp = self.restricted.image(i);
        (0..alg.dim())
            .map(|b| {
                let moved = SuperElement::from_coords(ad.column(b));
                let first = self.ordinary.eval2(phi, &g, &moved);
                let second = self.ordinary.eval2(phi, gp, &alg.basis_element(b));
                f.sub(first, second)
            })
            .collect()
    }

    fn in_z1(&self, v: &[u32]) -> bool {
        self.ordinary.d1_matrix().mul_vec(v).expect("C^1 length").iter().all(|&x| x == 0)
    }

    pub fn sixterm_maps(&self) -> Result<(SixTermMaps, SixTermDims), SixTermError> {
        let alg = self.restricted.algebra();
        let f = self.field();
        let m = alg.even_dim();
        let n2 = self.phi_len();

        let h1res = self.h1_res_quotient();
        let h1 = self.ordinary.h1_quotient();
        let h2res = self.h2_res_quotient();
        let h2 = self.ordinary.h2_quotient();
        let (n_h1, n_h2res, n_h2) = (h1.reps.len(), h2res.reps.len(), h2.reps.len());

        let iota1 = h1res
            .rep_vectors()
            .iter()
            .map(|v| class_of(&h1, v, "iota_1"))
            .collect::<Result<Vec<_>, _>>()?;
        let d = h1
            .rep_vectors()
            .into_iter()
            .map(|v| self.ind1(&Cochain1::from_coords(v)))
            .collect();
        let iota2 = (0..m)
            .map(|i| class_of(&h2res, &linalg::unit(n2 + m, n2 + i), "iota_2"))
            .collect::<Result<Vec<_>, _>>()?;
        let pi = h2res
            .rep_vectors()
            .iter()
            .map(|v| class_of(&h2, &v[..n2], "pi"))
            .collect::<Result<Vec<_>, _>>()?;

        for c in 0..self.ordinary.d1_matrix().cols() {
            let phi = Cochain2::from_coords(self.ordinary.d1_matrix().column(c));
            if (0..m).any(|i| self.h_functional(&phi, i).iter().any(|&x| x != 0)) {
                return Err(SixTermError::HNotWellDefined(alg.basis().label(c).to_string()));
            }
        }
        let mut h = Vec::with_capacity(n_h2);
        for (rep, v) in h2.rep_vectors().into_iter().enumerate() {
            let phi = Cochain2::from_coords(v);
            let mut col = Vec::with_capacity(m * n_h1);
            for i in 0..m {
                let value = self.h_functional(&phi, i);
                if !self.in_z1(&value) {
                    return Err(SixTermError::HNotInZ1 {
                        rep,
                        g: alg.basis().label(i).to_string(),
                    });
                }
                col.extend(class_of(&h1, &value, "H")?);
            }
            h.push(col);
        }

        let maps = SixTermMaps {
            iota1: columns(n_h1, iota1, f),
            d: columns(m, d, f),
            iota2: columns(n_h2res, iota2, f),
            pi: columns(n_h2, pi, f),
            h: columns(m * n_h1, h, f),
        };
        let dims = SixTermDims {
            h1_res: h1res.sdim(),
            h1: h1.sdim(),
            hom_fr: m,
            h2_res: h2res.sdim(),
            h2: h2.sdim(),
            hom_fr_h1: m * n_h1,
        };
        Ok((maps, dims))
    }

    /// Checks `im = ker` at every interior node via vanishing composites and
    /// rank counts.
    pub fn sixterm_verify(&self) -> Result<SixTermReport, SixTermError> {
        let (maps, dims) = self.sixterm_maps()?;
        let ranks = SixTermRanks {
            iota1: maps.iota1.rank(),
            d: maps.d.rank(),
            iota2: maps.iota2.rank(),
            pi: maps.pi.rank(),
            h: maps.h.rank(),
        };
        let vanishes = |a: &FpMatrix, b: &FpMatrix| a.mul(b).expect("composable").is_zero();
        let exact = |incoming: &FpMatrix, outgoing: &FpMatrix, rank_in: usize, rank_out: usize, dim: usize| {
            vanishes(outgoing, incoming) && rank_in + rank_out == dim
        };
        Ok(SixTermReport {
            iota1_injective: ranks.iota1 == dims.h1_res.total(),
            exact_at_h1: exact(&maps.iota1, &maps.d, ranks.iota1, ranks.d, dims.h1.total()),
            exact_at_hom_fr: exact(&maps.d, &maps.iota2, ranks.d, ranks.iota2, dims.hom_fr),
            exact_at_h2_res: exact(&maps.iota2, &maps.pi, ranks.iota2, ranks.pi, dims.h2_res.total()),
            exact_at_h2: exact(&maps.pi, &maps.h, ranks.pi, ranks.h, dims.h2.total()),
            dims,
            ranks,
        })
    }
}
