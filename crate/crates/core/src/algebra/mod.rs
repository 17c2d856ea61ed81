//! Exact arithmetic over `F_p` and `F_p[x]`.

mod factor;
mod field;
pub mod linalg;
mod poly;

pub use factor::{factorize, is_irreducible, FactoredPolynomial};
pub use field::{is_prime, FieldElement, PrimeField, MAX_MODULUS};
pub use poly::Polynomial;

pub(crate) use factor::odometer;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("no element of order {m} in F_{p}: {m} does not divide p - 1")]
    NoSuchRoot { p: u64, m: u64 },
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("elements of F_{left} and F_{right} cannot be combined")]
    FieldMismatch { left: u64, right: u64 },
    #[error("invalid factor list: {0}")]
    InvalidFactor(String),
    #[error("parse error: {0}")]
    Parse(String),
}
