//! Exact arithmetic on the single neutral fermion Fock space, the charged
//! fermion Fock space, and the quadratic representations of `a_inf` and
//! `d_inf` acting on them.
//!
//! Everything is computed over arbitrary-precision rationals. Modes of the
//! neutral fermion live in `Z + 1/2` and are stored doubled, so `-3` means
//! `phi_{-3/2}`.

pub mod analysis;
pub mod charged;
pub mod clifford;
mod error;
pub mod linalg;
pub mod matrix;
pub mod neutral;
pub mod reduction;
pub mod rep;
pub mod report;
pub mod wire;

pub use error::{FockError, Result};

/// Exact scalar type used throughout.
pub type Q = num_rational::BigRational;

pub(crate) fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub(crate) fn q_frac(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

pub use charged::ChargedMonomial;
pub use clifford::{Family, FockVector, Mode, Monomial, Species};
pub use matrix::{AlgebraElement, WeightLabel};
pub use reduction::{GeneratorAction, ReductionTrace};
pub use rep::{AlgebraKind, QuadOp, RepName};
