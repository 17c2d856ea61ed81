//! The three repeated-root cyclic constructions of MDS symbol-pair codes.
//!
//! | name   | length | generator                               | claimed `(n, k, d_H, d_p)` |
//! |--------|--------|-----------------------------------------|----------------------------|
//! | `thm1` | `4p`   | `(x-1)^3 (x-w)(x+w)`, `w` of order 4    | `(4p, 4p-5, 4, 7)`         |
//! | `thm2` | `5p`   | `(x-1)^3 (x-b)(x-b^2)`, `b` of order 5  | `(5p, 5p-5, 4, 7)`         |
//! | `thm3` | `5p`   | `(x-1)^3 (x-b)(x-b^2)^2`                | `(5p, 5p-6, 4, 8)`         |
//!
//! Roots of unity are always the smallest residue of the required order, so builds are
//! reproducible. For `p = 3 mod 4` there is no `w` in `F_p`; `thm1` then uses the irreducible
//! `x^2 + 1`, which is the same polynomial.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{is_prime, AlgebraError, FactoredPolynomial, Polynomial, PrimeField};
use crate::code::{CodeError, ConstacyclicCode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} needs an odd prime, got {p}")]
    BadPrime { family: FamilyName, p: u64 },
    #[error("{family} needs p = 1 mod 5, got p = {p}")]
    BadCongruence { family: FamilyName, p: u64 },
    #[error("unknown family {0:?} (expected thm1, thm2 or thm3)")]
    UnknownFamily(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyName {
    Thm1,
    Thm2,
    Thm3,
}

impl FamilyName {
    pub const ALL: [FamilyName; 3] = [FamilyName::Thm1, FamilyName::Thm2, FamilyName::Thm3];

    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyName::Thm1 => "thm1",
            FamilyName::Thm2 => "thm2",
            FamilyName::Thm3 => "thm3",
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyName {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        match s {
            "thm1" => Ok(FamilyName::Thm1),
            "thm2" => Ok(FamilyName::Thm2),
            "thm3" => Ok(FamilyName::Thm3),
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimedParams {
    pub n: usize,
    pub k: usize,
    pub d_h: usize,
    pub d_p: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub p: u64,
    pub claimed: ClaimedParams,
}

impl FamilySpec {
    /// Checks the prime conditions and records the claimed parameters.
    pub fn new(name: FamilyName, p: u64) -> Result<Self, FamilyError> {
        if p == 2 || !is_prime(p) {
            return Err(FamilyError::BadPrime { family: name, p });
        }
        let claimed = match name {
            FamilyName::Thm1 => {
                let n = 4 * p as usize;
                ClaimedParams {
                    n,
                    k: n - 5,
                    d_h: 4,
                    d_p: 7,
                }
            }
            FamilyName::Thm2 | FamilyName::Thm3 => {
                if p % 5 != 1 {
                    return Err(FamilyError::BadCongruence { family: name, p });
                }
                let n = 5 * p as usize;
                let (k, d_p) = if name == FamilyName::Thm2 {
                    (n - 5, 7)
                } else {
                    (n - 6, 8)
                };
                ClaimedParams { n, k, d_h: 4, d_p }
            }
        };
        Ok(Self { name, p, claimed })
    }

    pub fn build(&self) -> Result<ConstacyclicCode, FamilyError> {
        match self.name {
            FamilyName::Thm1 => theorem1_code(self.p),
            FamilyName::Thm2 => theorem2_code(self.p),
            FamilyName::Thm3 => theorem3_code(self.p),
        }
    }
}

pub fn build_family(name: FamilyName, p: u64) -> Result<ConstacyclicCode, FamilyError> {
    FamilySpec::new(name, p)?.build()
}

/// Length `4p`, generator `(x-1)^3 (x^2+1)`, factored according to `p mod 4`.
pub fn theorem1_code(p: u64) -> Result<ConstacyclicCode, FamilyError> {
    let spec = FamilySpec::new(FamilyName::Thm1, p)?;
    let field = PrimeField::new(p)?;
    let mut factors = vec![(Polynomial::linear(field.one()), 3)];
    if p % 4 == 1 {
        let omega = field.root_of_unity(4)?;
        factors.push((Polynomial::linear(omega), 1));
        factors.push((Polynomial::linear(-omega), 1));
    } else {
        factors.push((Polynomial::from_signed(field, &[1, 0, 1]), 1));
    }
    let g = FactoredPolynomial::new(field, factors)?;
    Ok(ConstacyclicCode::cyclic(field, spec.claimed.n, g)?)
}

fn five_p_code(
    name: FamilyName,
    p: u64,
    beta_sq_mult: u32,
) -> Result<ConstacyclicCode, FamilyError> {
    let spec = FamilySpec::new(name, p)?;
    let field = PrimeField::new(p)?;
    let beta = field.root_of_unity(5)?;
    let g = FactoredPolynomial::new(
        field,
        vec![
            (Polynomial::linear(field.one()), 3),
            (Polynomial::linear(beta), 1),
            (Polynomial::linear(beta * beta), beta_sq_mult),
        ],
    )?;
    Ok(ConstacyclicCode::cyclic(field, spec.claimed.n, g)?)
}

/// Length `5p`, generator `(x-1)^3 (x-b)(x-b^2)`.
pub fn theorem2_code(p: u64) -> Result<ConstacyclicCode, FamilyError> {
    five_p_code(FamilyName::Thm2, p, 1)
}

/// Length `5p`, generator `(x-1)^3 (x-b)(x-b^2)^2`.
pub fn theorem3_code(p: u64) -> Result<ConstacyclicCode, FamilyError> {
    five_p_code(FamilyName::Thm3, p, 2)
}
