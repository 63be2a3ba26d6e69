//! The two Heisenberg superalgebra families with their restricted
//! structures, and the closed-form cohomology dimensions they are known to
//! have.
//!
//! * `h(m, n)`: basis `x1..x(2m+1) | y1..yn`, `[x_i, x_{m+i}] = [y_j, y_j] = x(2m+1)`,
//!   with `x_i^[p] = lambda_i x(2m+1)`.
//! * `ba(n)`: basis `x1..xn | y1..y(n+1)`, `[x_i, y_i] = y(n+1)`, zero `[p]`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldError, PrimeField};
use crate::graded::SuperDim;
use crate::restricted::RestrictedSuperalgebra;
use crate::superalgebra::{LieSuperalgebra, SuperBasis, SuperElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family parameters must be at least 1 (got {0})")]
    Degenerate(&'static str),
    #[error("lambda needs {expected} entries, got {found}")]
    LambdaLength { expected: usize, found: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyKind {
    HeisenbergEven { m: usize, n: usize, lambda: Vec<u32> },
    HeisenbergOdd { n: usize },
}

fn labels(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

/// `h^lambda(m, n)` over F_p.
pub fn heisenberg_even(m: usize, n: usize, p: u32, lambda: &[u32]) -> Result<RestrictedSuperalgebra, FamilyError> {
    if m == 0 {
        return Err(FamilyError::Degenerate("m = 0"));
    }
    if n == 0 {
        return Err(FamilyError::Degenerate("n = 0"));
    }
    let field = PrimeField::new(p)?;
    let even = 2 * m + 1;
    if lambda.len() != even {
        return Err(FamilyError::LambdaLength {
            expected: even,
            found: lambda.len(),
        });
    }
    let basis = SuperBasis::new(labels("x", even), labels("y", n)).expect("distinct labels");
    let d = basis.dim();
    let center = even - 1;
    let mut alg = LieSuperalgebra::abelian(field, basis);
    let z = SuperElement::basis(d, center);
    for i in 0..m {
        alg.set_bracket_skew(i, m + i, z.coords()).expect("in range");
    }
    for j in even..d {
        alg.set_bracket_skew(j, j, z.coords()).expect("in range");
    }
    let images = lambda.iter().map(|&l| z.scale(field, l % p)).collect();
    Ok(RestrictedSuperalgebra::new(alg, images).expect("images are even"))
}

/// `ba(n)` over F_p with its (only) `[p]`-operator, zero.
pub fn heisenberg_odd(n: usize, p: u32) -> Result<RestrictedSuperalgebra, FamilyError> {
    if n == 0 {
        return Err(FamilyError::Degenerate("n = 0"));
    }
    let field = PrimeField::new(p)?;
    let basis = SuperBasis::new(labels("x", n), labels("y", n + 1)).expect("distinct labels");
    let d = basis.dim();
    let mut alg = LieSuperalgebra::abelian(field, basis);
    let z = SuperElement::basis(d, d - 1);
    for i in 0..n {
        alg.set_bracket_skew(i, n + i, z.coords()).expect("in range");
    }
    Ok(RestrictedSuperalgebra::with_zero_map(alg))
}

fn delta1(n: usize) -> usize {
    usize::from(n == 1)
}

/// `sdim H^2_res(h(m, n)) = (2m^2 + m + (n^2+n)/2, 2mn)`, for every lambda.
pub fn expected_sdim_h2res_even_family(m: usize, n: usize) -> SuperDim {
    SuperDim::new(2 * m * m + m + (n * n + n) / 2, 2 * m * n)
}

/// `sdim H^2_res(ba(n)) = (n^2 + n, n^2 - 1 + delta_{1,n})`.
pub fn expected_sdim_h2res_odd_family(n: usize) -> SuperDim {
    SuperDim::new(n * n + n, n * n - 1 + delta1(n))
}

/// `sdim H^2(h(m, n)) = (2m^2 - m + (n^2+n)/2 - 1, 2mn)`.
pub fn expected_sdim_h2_even_family(m: usize, n: usize) -> SuperDim {
    SuperDim::new(2 * m * m - m + (n * n + n) / 2 - 1, 2 * m * n)
}

/// `sdim H^2(ba(n)) = (n^2, n^2 - 1 + delta_{1,n})`.
pub fn expected_sdim_h2_odd_family(n: usize) -> SuperDim {
    SuperDim::new(n * n, n * n - 1 + delta1(n))
}

/// `sdim H^1 = sdim H^1_res = (2m, n)`.
pub fn expected_sdim_h1_even_family(m: usize, n: usize) -> SuperDim {
    SuperDim::new(2 * m, n)
}

/// `sdim H^1 = sdim H^1_res = (n, n)`.
pub fn expected_sdim_h1_odd_family(n: usize) -> SuperDim {
    SuperDim::new(n, n)
}

/// Residues in `[0, p)` drawn from ChaCha8 seeded with `seed`.
pub fn seeded_lambda(len: usize, p: u32, seed: u64) -> Vec<u32> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| rng.gen_range(0..p)).collect()
}

/// The lambda panel used in sweeps: zero, the first and last unit vectors,
/// and one seeded pseudorandom vector.
pub fn lambda_panel(m: usize, p: u32, seed: u64) -> Vec<(String, Vec<u32>)> {
    let len = 2 * m + 1;
    let unit = |i: usize| {
        let mut v = vec![0; len];
        v[i] = 1;
        v
    };
    vec![
        ("zero".to_string(), vec![0; len]),
        ("e1".to_string(), unit(0)),
        (format!("e{len}"), unit(len - 1)),
        (format!("random:{seed}"), seeded_lambda(len, p, seed)),
    ]
}

/// Identifies a restricted algebra as a family member with the canonical
/// basis order (labels are ignored).
pub fn recognize_family(r: &RestrictedSuperalgebra) -> Option<FamilyKind> {
    let alg = r.algebra();
    let p = alg.field().characteristic();
    let (e, o) = (alg.even_dim(), alg.odd_dim());
    let same = |cand: &RestrictedSuperalgebra| {
        cand.algebra().constants() == alg.constants()
            && (0..e).all(|i| cand.image(i).coords() == r.image(i).coords())
    };
    if e % 2 == 1 && e >= 3 && o >= 1 {
        let m = (e - 1) / 2;
        let lambda: Vec<u32> = (0..e).map(|i| r.image(i).coords()[e - 1]).collect();
        if let Ok(cand) = heisenberg_even(m, o, p, &lambda) {
            if same(&cand) {
                return Some(FamilyKind::HeisenbergEven { m, n: o, lambda });
            }
        }
    }
    if e >= 1 && o == e + 1 {
        if let Ok(cand) = heisenberg_odd(e, p) {
            if same(&cand) {
                return Some(FamilyKind::HeisenbergOdd { n: e });
            }
        }
    }
    None
}
