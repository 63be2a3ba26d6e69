//! Prime fields F_p with p an odd prime.
//!
//! Residues are stored as `u32` in `0..p`; every container in the crate
//! carries its [`PrimeField`] alongside plain residue vectors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("characteristic {0} is not supported, an odd prime is required")]
    EvenCharacteristic(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, FieldError> {
        if p == 2 {
            return Err(FieldError::EvenCharacteristic(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn characteristic(self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary integer into `0..p`.
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        let a = a % self.p;
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.p as u64 - 2))
        }
    }

    /// a^p. Over the prime field this is the identity, but callers that
    /// implement p-semilinear rules go through here so the rule stays visible.
    pub fn frobenius(self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }

    pub fn scalar(self, v: i64) -> FpScalar {
        FpScalar {
            value: self.reduce(v),
            modulus: self.p,
        }
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for display.
    pub fn signed(self, a: u32) -> i64 {
        let a = a as i64;
        let p = self.p as i64;
        if a > p / 2 {
            a - p
        } else {
            a
        }
    }

    /// `y += a * x`, elementwise.
    pub fn axpy(self, y: &mut [u32], a: u32, x: &[u32]) {
        debug_assert_eq!(y.len(), x.len());
        if a == 0 {
            return;
        }
        for (yi, &xi) in y.iter_mut().zip(x) {
            if xi != 0 {
                *yi = self.add(*yi, self.mul(a, xi));
            }
        }
    }

    pub fn scale(self, a: u32, x: &[u32]) -> Vec<u32> {
        x.iter().map(|&xi| self.mul(a, xi)).collect()
    }

    pub fn add_vec(self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| self.add(a, b)).collect()
    }

    pub fn sub_vec(self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| self.sub(a, b)).collect()
    }

    pub fn dot(self, x: &[u32], y: &[u32]) -> u32 {
        x.iter()
            .zip(y)
            .fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// A residue tagged with its modulus.
///
/// This is the self-describing scalar used at API boundaries; arithmetic
/// between scalars of different moduli is a programming error and panics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u32,
    modulus: u32,
}

impl FpScalar {
    pub fn new(value: i64, field: PrimeField) -> Self {
        field.scalar(value)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    fn field(self) -> PrimeField {
        PrimeField { p: self.modulus }
    }

    fn same_field(self, other: Self) -> PrimeField {
        assert_eq!(
            self.modulus, other.modulus,
            "arithmetic between residues of different moduli"
        );
        self.field()
    }

    pub fn inv(self) -> Option<Self> {
        self.field().inv(self.value).map(|value| Self { value, ..self })
    }

    pub fn pow(self, e: u64) -> Self {
        Self {
            value: self.field().pow(self.value, e),
            ..self
        }
    }
}

impl Add for FpScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let f = self.same_field(rhs);
        Self {
            value: f.add(self.value, rhs.value),
            ..self
        }
    }
}

impl Sub for FpScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let f = self.same_field(rhs);
        Self {
            value: f.sub(self.value, rhs.value),
            ..self
        }
    }
}

impl Mul for FpScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let f = self.same_field(rhs);
        Self {
            value: f.mul(self.value, rhs.value),
            ..self
        }
    }
}

impl Neg for FpScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            value: self.field().neg(self.value),
            ..self
        }
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}
