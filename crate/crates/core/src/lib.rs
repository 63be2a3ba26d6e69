//! Exact cohomology of restricted Lie superalgebras over prime fields.
//!
//! Everything is computed over `F_p` with residues stored as `u32`; there is
//! no floating point anywhere. Bases are ordered with the even block first.

pub mod cochain;
pub mod extensions;
pub mod families;
pub mod field;
pub(crate) mod graded;
pub mod linalg;
pub mod rescohomology;
pub mod restricted;
pub mod superalgebra;

pub use cochain::{Cochain1, Cochain2, Cochain3, CochainComplex, CohomologyReport, WedgeBasis2, WedgeBasis3};
pub use extensions::{central_extension, extension_catalog, CatalogEntry, ExtensionError, ExtensionResult, SplitKind};
pub use families::{heisenberg_even, heisenberg_odd, FamilyError, FamilyKind};
pub use field::{FieldError, FpScalar, PrimeField};
pub use graded::SuperDim;
pub use linalg::{FpMatrix, LinalgError};
pub use rescohomology::{FrobeniusMap, RestrictedCochain2, RestrictedComplex, SixTermReport};
pub use restricted::{jacobson_check, JacobsonOutcome, POperator, RestrictedError, RestrictedSuperalgebra};
pub use superalgebra::{AlgebraError, LieSuperalgebra, Parity, SuperBasis, SuperElement};
