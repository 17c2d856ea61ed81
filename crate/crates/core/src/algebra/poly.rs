//! Dense polynomials over `F_p`, coefficients little-endian by degree.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::{AlgebraError, FieldElement, PrimeField};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl Polynomial {
    /// Builds a polynomial from canonical or unreduced residues; trailing zeros are trimmed.
    pub fn new(field: PrimeField, coeffs: Vec<u64>) -> Self {
        let p = field.modulus();
        let mut coeffs = coeffs;
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        let mut poly = Self { field, coeffs };
        poly.trim();
        poly
    }

    pub fn from_signed(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::new(
            field,
            coeffs.iter().map(|&c| field.reduce_signed(c)).collect(),
        )
    }

    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: PrimeField, c: u64) -> Self {
        Self::new(field, vec![c])
    }

    /// `x^k`.
    pub fn monomial(field: PrimeField, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Self { field, coeffs }
    }

    /// `x - a`.
    pub fn linear(a: FieldElement) -> Self {
        let field = a.field();
        Self::new(field, vec![field.neg(a.value()), 1])
    }

    /// `x^n - eta`.
    pub fn x_pow_minus(field: PrimeField, n: usize, eta: u64) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        coeffs[0] = field.sub(coeffs[0], eta % field.modulus());
        Self::new(field, coeffs)
    }

    /// Parses comma-separated coefficients, constant term first. Negative entries
    /// are reduced mod p.
    pub fn parse(field: PrimeField, text: &str) -> Result<Self, AlgebraError> {
        let mut coeffs = Vec::new();
        for tok in text.split(',') {
            let tok = tok.trim();
            let v: i64 = tok
                .parse()
                .map_err(|_| AlgebraError::Parse(format!("bad coefficient {tok:?} in {text:?}")))?;
            coeffs.push(field.reduce_signed(v));
        }
        Ok(Self::new(field, coeffs))
    }

    /// Inverse of [`Polynomial::parse`], writing canonical residues.
    pub fn to_text(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Raw residues, index = degree.
    #[inline]
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field
            .from_u64(self.coeffs.get(i).copied().unwrap_or(0))
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().map(|&c| self.field.from_u64(c))
    }

    /// Number of nonzero coefficients.
    pub fn hamming_weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    /// Coefficient vector padded with zeros to `len`. Panics if the polynomial is longer.
    pub fn to_vec_padded(&self, len: usize) -> Vec<u64> {
        assert!(self.coeffs.len() <= len, "polynomial longer than {len}");
        let mut v = self.coeffs.clone();
        v.resize(len, 0);
        v
    }

    pub fn scale(&self, s: u64) -> Self {
        let f = self.field;
        Self::new(f, self.coeffs.iter().map(|&c| f.mul(c, s)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => self.scale(self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, a: FieldElement) -> FieldElement {
        self.check_field(a.field());
        let f = self.field;
        let v = self
            .coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, a.value()), c));
        f.from_u64(v)
    }

    /// Classical formal derivative.
    pub fn derivative(&self) -> Self {
        let f = self.field;
        let p = f.modulus();
        Self::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, &c)| f.mul(c, j as u64 % p))
                .collect(),
        )
    }

    /// The `k`-th Hasse derivative evaluated at `a`: `sum_j C(j,k) c_j a^(j-k)`.
    ///
    /// Binomials are reduced with Lucas' theorem, so the result is meaningful for every `k`,
    /// including `k >= p`. For `k < p` it equals the classical `k`-th derivative divided by `k!`.
    pub fn hasse_derivative_eval(&self, a: FieldElement, k: usize) -> FieldElement {
        self.check_field(a.field());
        let f = self.field;
        let mut acc = 0u64;
        let mut apow = 1u64;
        for j in k..self.coeffs.len() {
            let c = self.coeffs[j];
            if c != 0 {
                let b = binomial_mod_p(j as u64, k as u64, &f);
                if b != 0 {
                    acc = f.add(acc, f.mul(f.mul(b, c), apow));
                }
            }
            apow = f.mul(apow, a.value());
        }
        f.from_u64(acc)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Self::one(self.field);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Long division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), AlgebraError> {
        self.check_field(divisor.field);
        let f = self.field;
        let db = divisor.degree().ok_or(AlgebraError::DivisionByZeroPoly)?;
        let Some(da) = self.degree() else {
            return Ok((Self::zero(f), Self::zero(f)));
        };
        if da < db {
            return Ok((Self::zero(f), self.clone()));
        }
        let lead_inv = f
            .inv(divisor.coeffs[db])
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; da - db + 1];
        for i in (0..=da - db).rev() {
            let c = rem[i + db];
            if c == 0 {
                continue;
            }
            let q = f.mul(c, lead_inv);
            quot[i] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(q, d));
            }
        }
        rem.truncate(db);
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.divmod(divisor).map(|(_, r)| r)
    }

    pub fn divides(&self, other: &Polynomial) -> Result<bool, AlgebraError> {
        Ok(other.rem(self)?.is_zero())
    }

    /// `x^exponent mod modulus` by square-and-multiply on residues.
    pub fn x_power_mod(exponent: u64, modulus: &Polynomial) -> Result<Polynomial, AlgebraError> {
        let f = modulus.field;
        if modulus.degree().is_none_or(|d| d == 0) {
            return Err(AlgebraError::DivisionByZeroPoly);
        }
        let mut acc = Self::one(f);
        let mut base = Self::monomial(f, 1).rem(modulus)?;
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(modulus)?;
            }
        }
        Ok(acc)
    }

    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    fn check_field(&self, other: PrimeField) {
        assert_eq!(
            self.field, other,
            "arithmetic between polynomials over different fields"
        );
    }
}

/// `C(n, k) mod p` by Lucas' theorem.
pub(crate) fn binomial_mod_p(mut n: u64, mut k: u64, f: &PrimeField) -> u64 {
    let p = f.modulus();
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        acc = f.mul(acc, small_binomial(ni, ki, f));
        n /= p;
        k /= p;
    }
    acc
}

fn small_binomial(n: u64, k: u64, f: &PrimeField) -> u64 {
    // n < p, so every factor below is invertible
    let k = k.min(n - k);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num = f.mul(num, n - i);
        den = f.mul(den, i + 1);
    }
    f.mul(num, f.inv(den).expect("k! invertible for k < p"))
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_field(rhs.field);
        let f = self.field;
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                f.add(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    rhs.coeffs.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Polynomial::new(f, coeffs)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_field(rhs.field);
        let f = self.field;
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                f.sub(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    rhs.coeffs.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Polynomial::new(f, coeffs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_field(rhs.field);
        let f = self.field;
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(f);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Polynomial::new(f, out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}
