//! Dense exact linear algebra over F_p.
//!
//! Pivoting always takes the first nonzero entry in column order, so every
//! echelon form, kernel basis and quotient basis is reproducible.

use std::fmt;

use thiserror::Error;

use crate::field::{FpScalar, PrimeField};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("entry ({row}, {col}) is a residue mod {found}, expected mod {expected}")]
    MixedModuli {
        row: usize,
        col: usize,
        expected: u32,
        found: u32,
    },
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: FpMatrix,
    pub pivots: Vec<usize>,
}

impl FpMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from residue rows. Entries are reduced mod p.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::Ragged {
                    row: r,
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row.iter().map(|&v| v % field.characteristic()));
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (r, &v) in col.iter().enumerate() {
                m.set(r, c, v % field.characteristic());
            }
        }
        Ok(m)
    }

    /// Builds a matrix from self-describing scalars; all entries must share
    /// one modulus. The field is taken from the first entry.
    pub fn from_scalars(rows: &[Vec<FpScalar>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let modulus = rows.iter().flatten().next().map(|s| s.modulus());
        let field = match modulus {
            Some(p) => PrimeField::new(p).expect("scalars only come from a validated field"),
            // an empty grid still needs some field; F_3 is the smallest legal one
            None => PrimeField::new(3).expect("3 is prime"),
        };
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::Ragged {
                    row: r,
                    expected: cols,
                    found: row.len(),
                });
            }
            for (c, s) in row.iter().enumerate() {
                if s.modulus() != field.characteristic() {
                    return Err(LinalgError::MixedModuli {
                        row: r,
                        col: c,
                        expected: field.characteristic(),
                        found: s.modulus(),
                    });
                }
                data.push(s.value());
            }
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Appends the rows of `other` below `self`.
    pub fn stack(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                let start = r * out.cols;
                f.axpy(&mut out.data[start..start + out.cols], a, other.row(k));
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u32]) -> Result<Vec<u32>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|r| self.field.dot(self.row(r), v)).collect())
    }

    /// Square matrix power.
    pub fn pow(&self, e: u32) -> Self {
        assert_eq!(self.rows, self.cols, "pow of a non-square matrix");
        let mut acc = Self::identity(self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self).expect("square");
        }
        acc
    }

    pub fn rref(&self) -> Echelon {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(r) = (lead..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            if r != lead {
                for k in 0..m.cols {
                    m.data.swap(r * m.cols + k, lead * m.cols + k);
                }
            }
            let inv = f.inv(m.get(lead, c)).expect("pivot is nonzero");
            for k in 0..m.cols {
                let v = m.get(lead, k);
                m.set(lead, k, f.mul(v, inv));
            }
            let pivot_row = m.row(lead).to_vec();
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let factor = m.get(r, c);
                if factor != 0 {
                    let start = r * m.cols;
                    let cols = m.cols;
                    f.axpy(&mut m.data[start..start + cols], f.neg(factor), &pivot_row);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{v : Mv = 0}` in reduced echelon form (leading
    /// coefficients 1, ordered by leading position).
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let Echelon { matrix, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let raw: Vec<Vec<u32>> = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0; self.cols];
                v[free] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(matrix.get(r, free));
                }
                v
            })
            .collect();
        span_basis(f, self.cols, &raw)
    }

    /// One solution of `Mx = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug = Self::zeros(self.field, self.rows, self.cols + 1);
        for (r, &br) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, br % self.field.characteristic());
        }
        let Echelon { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = matrix.get(r, self.cols);
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

fn check_dims(dim: usize, vectors: &[Vec<u32>]) -> Result<(), LinalgError> {
    match vectors.iter().find(|v| v.len() != dim) {
        Some(v) => Err(LinalgError::DimensionMismatch {
            expected: dim,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

fn stacked(field: PrimeField, dim: usize, vectors: &[Vec<u32>]) -> FpMatrix {
    FpMatrix::from_rows(field, dim, vectors).expect("dimensions checked by caller")
}

/// Rank of the span of `vectors` in F_p^dim.
pub fn span_rank(field: PrimeField, dim: usize, vectors: &[Vec<u32>]) -> usize {
    stacked(field, dim, vectors).rank()
}

/// Canonical (reduced echelon) basis of the span of `vectors`.
pub fn span_basis(field: PrimeField, dim: usize, vectors: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let Echelon { matrix, pivots } = stacked(field, dim, vectors).rref();
    (0..pivots.len()).map(|r| matrix.row(r).to_vec()).collect()
}

/// Whether `v` lies in the span of `vectors`.
pub fn in_span(field: PrimeField, dim: usize, vectors: &[Vec<u32>], v: &[u32]) -> bool {
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    let base = span_rank(field, dim, vectors);
    let mut with = vectors.to_vec();
    with.push(v.to_vec());
    span_rank(field, dim, &with) == base
}

/// Standard vectors completing an echelon basis of `span(sub)` to a basis
/// of F_p^ambient_dim: one unit vector per non-pivot column, ascending.
pub fn quotient_basis(
    field: PrimeField,
    sub: &[Vec<u32>],
    ambient_dim: usize,
) -> Result<Vec<Vec<u32>>, LinalgError> {
    check_dims(ambient_dim, sub)?;
    let pivots = stacked(field, ambient_dim, sub).rref().pivots;
    let mut is_pivot = vec![false; ambient_dim];
    for p in pivots {
        is_pivot[p] = true;
    }
    Ok((0..ambient_dim)
        .filter(|&c| !is_pivot[c])
        .map(|c| unit(ambient_dim, c))
        .collect())
}

/// Greedy complement: walks `candidates` in order and keeps each one that is
/// independent of `sub` plus the candidates already kept.
pub fn complement_from(
    field: PrimeField,
    dim: usize,
    sub: &[Vec<u32>],
    candidates: impl IntoIterator<Item = Vec<u32>>,
) -> Vec<Vec<u32>> {
    let mut basis = span_basis(field, dim, sub);
    let mut rank = basis.len();
    let mut kept = Vec::new();
    for cand in candidates {
        let mut trial = basis.clone();
        trial.push(cand.clone());
        let r = span_rank(field, dim, &trial);
        if r > rank {
            rank = r;
            basis = trial;
            kept.push(cand);
        }
    }
    kept
}

pub fn unit(dim: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v
}

/// Coordinates of `v` with respect to the (independent) vectors `basis`,
/// or `None` if `v` is outside their span.
pub fn coordinates_in(field: PrimeField, dim: usize, basis: &[Vec<u32>], v: &[u32]) -> Option<Vec<u32>> {
    let m = FpMatrix::from_columns(field, dim, basis).ok()?;
    m.solve(v).ok().flatten()
}
