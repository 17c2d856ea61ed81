//! Prime fields `F_p` with canonical residues.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::AlgebraError;

/// Largest accepted modulus. Residues are `u64`, products are taken in `u128`.
pub const MAX_MODULUS: u64 = 1 << 62;

/// The prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Creates `F_p`, checking primality by trial division.
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if !(2..=MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Element from a signed integer, reduced into `[0, p)`.
    pub fn elem(&self, v: i64) -> FieldElement {
        FieldElement {
            value: self.reduce_signed(v),
            field: *self,
        }
    }

    /// Element from a residue that is already canonical or needs reduction.
    pub fn from_u64(&self, v: u64) -> FieldElement {
        FieldElement {
            value: v % self.p,
            field: *self,
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            value: 0,
            field: *self,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            value: 1,
            field: *self,
        }
    }

    #[inline]
    pub fn reduce_signed(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }

    // Raw residue arithmetic. Inputs must be canonical.

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        let mut b = base % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        acc
    }

    /// Inverse by the extended Euclidean algorithm; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        let a = a % self.p;
        if a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i128, a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Some(s0.rem_euclid(self.p as i128) as u64)
    }

    /// Multiplicative order of a nonzero residue.
    pub fn order(&self, a: u64) -> Option<u64> {
        let a = a % self.p;
        if a == 0 {
            return None;
        }
        let group = self.p - 1;
        let mut ord = group;
        for (q, _) in factor_u64(group) {
            while ord.is_multiple_of(q) && self.pow(a, ord / q) == 1 {
                ord /= q;
            }
        }
        Some(ord)
    }

    /// Smallest residue of multiplicative order exactly `m`.
    pub fn root_of_unity(&self, m: u64) -> Result<FieldElement, AlgebraError> {
        if m == 0 || !(self.p - 1).is_multiple_of(m) {
            return Err(AlgebraError::NoSuchRoot { p: self.p, m });
        }
        (1..self.p)
            .find(|&a| self.order(a) == Some(m))
            .map(|a| self.from_u64(a))
            .ok_or(AlgebraError::NoSuchRoot { p: self.p, m })
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// A residue in `[0, p)` tagged with its field.
///
/// Arithmetic operators panic when the operands come from different fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    field: PrimeField,
}

impl FieldElement {
    #[inline]
    pub fn value(&self) -> u64 {
        self.value
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn inverse(&self) -> Result<FieldElement, AlgebraError> {
        self.field
            .inv(self.value)
            .map(|v| FieldElement {
                value: v,
                field: self.field,
            })
            .ok_or(AlgebraError::ZeroInverse)
    }

    pub fn pow(&self, exp: u64) -> FieldElement {
        FieldElement {
            value: self.field.pow(self.value, exp),
            field: self.field,
        }
    }

    /// Checked variant of `+` that reports mismatched fields instead of panicking.
    pub fn try_add(self, rhs: FieldElement) -> Result<FieldElement, AlgebraError> {
        self.same_field(&rhs)?;
        Ok(self + rhs)
    }

    /// Checked variant of `*`.
    pub fn try_mul(self, rhs: FieldElement) -> Result<FieldElement, AlgebraError> {
        self.same_field(&rhs)?;
        Ok(self * rhs)
    }

    fn same_field(&self, rhs: &FieldElement) -> Result<(), AlgebraError> {
        if self.field != rhs.field {
            return Err(AlgebraError::FieldMismatch {
                left: self.field.p,
                right: rhs.field.p,
            });
        }
        Ok(())
    }

    #[inline]
    fn assert_same(&self, rhs: &FieldElement) {
        assert_eq!(
            self.field, rhs.field,
            "arithmetic between elements of different fields"
        );
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.assert_same(&rhs);
        FieldElement {
            value: self.field.add(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self.assert_same(&rhs);
        FieldElement {
            value: self.field.sub(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.assert_same(&rhs);
        FieldElement {
            value: self.field.mul(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub(crate) fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
