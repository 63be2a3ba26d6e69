//! Parity-split subquotients `ker(d) / span(boundaries)` of a coordinate
//! space whose coordinates each carry a parity.

use std::fmt;

use serde::ser::{Serialize, SerializeTuple, Serializer};

use crate::field::PrimeField;
use crate::linalg::{self, FpMatrix};
use crate::superalgebra::Parity;

/// Super-dimension `(even, odd)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct SuperDim {
    pub even: usize,
    pub odd: usize,
}

impl SuperDim {
    pub fn new(even: usize, odd: usize) -> Self {
        Self { even, odd }
    }

    pub fn total(self) -> usize {
        self.even + self.odd
    }

    pub fn get(self, parity: Parity) -> usize {
        match parity {
            Parity::Even => self.even,
            Parity::Odd => self.odd,
        }
    }
}

impl From<(usize, usize)> for SuperDim {
    fn from((even, odd): (usize, usize)) -> Self {
        Self { even, odd }
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

impl Serialize for SuperDim {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.even)?;
        t.serialize_element(&self.odd)?;
        t.end()
    }
}

/// `Z / B` split by parity, with explicit coset representatives.
///
/// All vectors live in the full coordinate space (length `dim`); a vector of
/// one parity is zero on the coordinates of the other.
#[derive(Clone, Debug)]
pub(crate) struct GradedQuotient {
    field: PrimeField,
    dim: usize,
    pub cocycles: [Vec<Vec<u32>>; 2],
    pub boundaries: [Vec<Vec<u32>>; 2],
    /// Representatives, even ones first.
    pub reps: Vec<(Parity, Vec<u32>)>,
}

fn slot(p: Parity) -> usize {
    p.bit() as usize
}

impl GradedQuotient {
    /// `differential` has one column per coordinate; `boundary_gens` are
    /// homogeneous vectors spanning the boundaries. Representatives are
    /// picked greedily from `preferred` coordinates (unit vectors, in the
    /// given order) that are cocycles, then from the kernel basis.
    pub fn compute(
        field: PrimeField,
        parities: &[Parity],
        differential: &FpMatrix,
        boundary_gens: &[Vec<u32>],
        preferred: &[usize],
    ) -> Self {
        let dim = parities.len();
        assert_eq!(differential.cols(), dim);
        let mut cocycles: [Vec<Vec<u32>>; 2] = [Vec::new(), Vec::new()];
        let mut boundaries: [Vec<Vec<u32>>; 2] = [Vec::new(), Vec::new()];
        let mut reps = Vec::new();
        for parity in [Parity::Even, Parity::Odd] {
            let cols: Vec<usize> = (0..dim).filter(|&c| parities[c] == parity).collect();
            let sub = FpMatrix::from_columns(
                field,
                differential.rows(),
                &cols.iter().map(|&c| differential.column(c)).collect::<Vec<_>>(),
            )
            .expect("uniform column length");
            let kernel: Vec<Vec<u32>> = sub
                .kernel_basis()
                .into_iter()
                .map(|v| embed(dim, &cols, &v))
                .collect();
            let gens: Vec<Vec<u32>> = boundary_gens
                .iter()
                .filter(|v| vector_parity(parities, v) == Some(parity))
                .cloned()
                .collect();
            let bnd = linalg::span_basis(field, dim, &gens);

            let zero_column = |c: usize| (0..differential.rows()).all(|r| differential.get(r, c) == 0);
            let candidates = preferred
                .iter()
                .copied()
                .filter(|&c| parities[c] == parity && zero_column(c))
                .map(|c| linalg::unit(dim, c))
                .chain(kernel.iter().cloned());
            let mut kept = linalg::complement_from(field, dim, &bnd, candidates);
            kept.sort_by_key(|v| v.iter().position(|&x| x != 0));
            reps.extend(kept.into_iter().map(|v| (parity, v)));

            cocycles[slot(parity)] = kernel;
            boundaries[slot(parity)] = bnd;
        }
        Self {
            field,
            dim,
            cocycles,
            boundaries,
            reps,
        }
    }

    pub fn sdim(&self) -> SuperDim {
        let count = |p| self.reps.iter().filter(|(q, _)| *q == p).count();
        SuperDim::new(count(Parity::Even), count(Parity::Odd))
    }

    pub fn all_cocycles(&self) -> Vec<Vec<u32>> {
        self.cocycles.concat()
    }

    pub fn all_boundaries(&self) -> Vec<Vec<u32>> {
        self.boundaries.concat()
    }

    pub fn rep_vectors(&self) -> Vec<Vec<u32>> {
        self.reps.iter().map(|(_, v)| v.clone()).collect()
    }

    /// Coordinates of the class of `v` over the representatives, or `None`
    /// if `v` is not a cocycle.
    pub fn class_coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        let mut basis = self.all_boundaries();
        let nb = basis.len();
        basis.extend(self.rep_vectors());
        let x = linalg::coordinates_in(self.field, self.dim, &basis, v)?;
        Some(x[nb..].to_vec())
    }
}

fn embed(dim: usize, cols: &[usize], v: &[u32]) -> Vec<u32> {
    let mut out = vec![0; dim];
    for (&c, &x) in cols.iter().zip(v) {
        out[c] = x;
    }
    out
}

/// Parity of a homogeneous nonzero vector.
pub(crate) fn vector_parity(parities: &[Parity], v: &[u32]) -> Option<Parity> {
    let mut found = None;
    for (&x, &p) in v.iter().zip(parities) {
        if x == 0 {
            continue;
        }
        match found {
            None => found = Some(p),
            Some(q) if q != p => return None,
            _ => {}
        }
    }
    found
}
