//! Factored polynomials and a small-scale factorization routine.

use std::fmt;

use super::{AlgebraError, Polynomial, PrimeField};

/// A product of distinct monic irreducibles with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredPolynomial {
    field: PrimeField,
    factors: Vec<(Polynomial, u32)>,
}

impl FactoredPolynomial {
    /// Validates that every factor is monic, irreducible, and distinct from the others,
    /// and that every multiplicity is positive.
    pub fn new(field: PrimeField, factors: Vec<(Polynomial, u32)>) -> Result<Self, AlgebraError> {
        for (i, (m, e)) in factors.iter().enumerate() {
            if m.field() != field {
                return Err(AlgebraError::FieldMismatch {
                    left: field.modulus(),
                    right: m.field().modulus(),
                });
            }
            if *e == 0 {
                return Err(AlgebraError::InvalidFactor(format!(
                    "factor {m} has multiplicity 0"
                )));
            }
            if !m.is_monic() {
                return Err(AlgebraError::NotMonic);
            }
            if !is_irreducible(m) {
                return Err(AlgebraError::InvalidFactor(format!(
                    "{m} is not irreducible"
                )));
            }
            if factors[..i].iter().any(|(other, _)| other == m) {
                return Err(AlgebraError::InvalidFactor(format!("{m} listed twice")));
            }
        }
        Ok(Self { field, factors })
    }

    pub fn one(field: PrimeField) -> Self {
        Self {
            field,
            factors: Vec::new(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn factors(&self) -> &[(Polynomial, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(m, e)| m.degree().unwrap_or(0) * *e as usize)
            .sum()
    }

    /// Multiplies the factors out.
    pub fn expand(&self) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::one(self.field), |acc, (m, e)| {
                &acc * &m.pow(*e as u64)
            })
    }

    /// Product of the distinct factors whose multiplicity exceeds `t`.
    pub fn radical_above(&self, t: u64) -> FactoredPolynomial {
        FactoredPolynomial {
            field: self.field,
            factors: self
                .factors
                .iter()
                .filter(|(_, e)| *e as u64 > t)
                .map(|(m, _)| (m.clone(), 1))
                .collect(),
        }
    }
}

impl fmt::Display for FactoredPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (m, e) in &self.factors {
            if *e == 1 {
                write!(f, "({m})")?;
            } else {
                write!(f, "({m})^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn is_irreducible(m: &Polynomial) -> bool {
    match m.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => match factorize(&m.monic()) {
            Ok(fp) => fp.factors.len() == 1 && fp.factors[0].1 == 1,
            Err(_) => false,
        },
    }
}

/// Complete factorization of a monic polynomial into monic irreducibles.
///
/// Linear factors are pulled out by trying every residue as a root. The remaining part is
/// trial-divided by every monic polynomial of degree `2, 3, ...` up to half its degree; since
/// lower-degree factors are already gone when a candidate is tried, any candidate that divides
/// is irreducible. Intended for small fields and degrees.
pub fn factorize(f: &Polynomial) -> Result<FactoredPolynomial, AlgebraError> {
    if f.is_zero() || !f.is_monic() {
        return Err(AlgebraError::NotMonic);
    }
    let field = f.field();
    let p = field.modulus();
    let mut rest = f.clone();
    let mut factors: Vec<(Polynomial, u32)> = Vec::new();

    for a in 0..p {
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
        let lin = Polynomial::linear(field.from_u64(a));
        let mult = strip(&mut rest, &lin);
        if mult > 0 {
            factors.push((lin, mult));
        }
    }

    let mut d = 2usize;
    while d * 2 <= rest.degree().unwrap_or(0) {
        let mut digits = vec![0u64; d];
        loop {
            let mut coeffs = digits.clone();
            coeffs.push(1);
            let cand = Polynomial::new(field, coeffs);
            let mult = strip(&mut rest, &cand);
            if mult > 0 {
                factors.push((cand, mult));
            }
            if d * 2 > rest.degree().unwrap_or(0) || !odometer(&mut digits, p) {
                break;
            }
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        factors.push((rest, 1));
    }
    Ok(FactoredPolynomial { field, factors })
}

fn strip(rest: &mut Polynomial, m: &Polynomial) -> u32 {
    let mut mult = 0;
    loop {
        let (q, r) = rest.divmod(m).expect("nonzero candidate");
        if !r.is_zero() {
            return mult;
        }
        *rest = q;
        mult += 1;
    }
}

/// Advances a base-`p` counter; false once it wraps.
pub(crate) fn odometer(digits: &mut [u64], p: u64) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}
