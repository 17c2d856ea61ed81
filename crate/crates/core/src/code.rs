//! Constacyclic codes as ideals `<g(x)>` of `F_p[x]/<x^n - eta>`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::linalg::{column_rank, Matrix, RankScratch};
use crate::algebra::{
    factorize, AlgebraError, FactoredPolynomial, FieldElement, Polynomial, PrimeField,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("code length must be positive")]
    BadLength,
    #[error("eta must be nonzero")]
    ZeroEta,
    #[error("generator {generator} does not divide x^{n} - {eta}")]
    NotADivisor {
        generator: String,
        n: usize,
        eta: u64,
    },
    #[error("expected length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A vector of length `n` over `F_p`, stored as canonical residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    field: PrimeField,
    coords: Vec<u64>,
}

impl Codeword {
    pub fn new(field: PrimeField, coords: Vec<u64>) -> Self {
        let p = field.modulus();
        Self {
            field,
            coords: coords.into_iter().map(|c| c % p).collect(),
        }
    }

    pub fn from_elements(field: PrimeField, coords: &[FieldElement]) -> Result<Self, AlgebraError> {
        coords
            .iter()
            .map(|c| {
                if c.field() == field {
                    Ok(c.value())
                } else {
                    Err(AlgebraError::FieldMismatch {
                        left: field.modulus(),
                        right: c.field().modulus(),
                    })
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(|coords| Self { field, coords })
    }

    pub fn zero(field: PrimeField, n: usize) -> Self {
        Self {
            field,
            coords: vec![0; n],
        }
    }

    /// Coefficient vector of `poly`, padded to `n`. Fails if `deg poly >= n`.
    pub fn from_polynomial(poly: &Polynomial, n: usize) -> Result<Self, CodeError> {
        let len = poly.coeffs().len();
        if len > n {
            return Err(CodeError::LengthMismatch {
                expected: n,
                actual: len,
            });
        }
        Ok(Self {
            field: poly.field(),
            coords: poly.to_vec_padded(n),
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> FieldElement {
        self.field.from_u64(self.coords[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.field, self.coords.clone())
    }

    pub fn hamming_weight(&self) -> usize {
        crate::metric::hamming_weight(&self.coords)
    }

    pub fn pair_weight(&self) -> usize {
        crate::metric::pair_weight(&self.coords).unwrap_or(0)
    }

    pub fn add(&self, other: &Codeword) -> Codeword {
        assert_eq!(self.field, other.field);
        assert_eq!(self.len(), other.len());
        let f = self.field;
        Codeword {
            field: f,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: u64) -> Codeword {
        let f = self.field;
        Codeword {
            field: f,
            coords: self
                .coords
                .iter()
                .map(|&a| f.mul(a, s % f.modulus()))
                .collect(),
        }
    }
}

/// An `eta`-constacyclic code `<g>` of length `n = l * p^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstacyclicCode {
    field: PrimeField,
    n: usize,
    eta: FieldElement,
    generator: FactoredPolynomial,
    generator_poly: Polynomial,
    l: usize,
    e: u32,
}

impl ConstacyclicCode {
    /// Validates `g | x^n - eta`; the generator is taken as given, never refactored.
    pub fn new(
        field: PrimeField,
        n: usize,
        eta: FieldElement,
        generator: FactoredPolynomial,
    ) -> Result<Self, CodeError> {
        if n == 0 {
            return Err(CodeError::BadLength);
        }
        if eta.field() != field || generator.field() != field {
            return Err(AlgebraError::FieldMismatch {
                left: field.modulus(),
                right: if eta.field() != field {
                    eta.field().modulus()
                } else {
                    generator.field().modulus()
                },
            }
            .into());
        }
        if eta.is_zero() {
            return Err(CodeError::ZeroEta);
        }
        let generator_poly = generator.expand();
        let modulus = Polynomial::x_pow_minus(field, n, eta.value());
        if !generator_poly.divides(&modulus)? {
            return Err(CodeError::NotADivisor {
                generator: generator.to_string(),
                n,
                eta: eta.value(),
            });
        }
        let p = field.modulus() as usize;
        let (mut l, mut e) = (n, 0u32);
        while l % p == 0 {
            l /= p;
            e += 1;
        }
        Ok(Self {
            field,
            n,
            eta,
            generator,
            generator_poly,
            l,
            e,
        })
    }

    /// Cyclic code (`eta = 1`).
    pub fn cyclic(
        field: PrimeField,
        n: usize,
        generator: FactoredPolynomial,
    ) -> Result<Self, CodeError> {
        Self::new(field, n, field.one(), generator)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.n - self.generator_poly.degree().unwrap_or(0)
    }

    pub fn eta(&self) -> FieldElement {
        self.eta
    }

    pub fn is_cyclic(&self) -> bool {
        self.eta.value() == 1
    }

    pub fn generator(&self) -> &FactoredPolynomial {
        &self.generator
    }

    pub fn generator_poly(&self) -> &Polynomial {
        &self.generator_poly
    }

    pub fn redundancy(&self) -> usize {
        self.n - self.k()
    }

    /// Prime-to-`p` part of the length.
    pub fn l(&self) -> usize {
        self.l
    }

    /// Exponent `e` with `n = l * p^e`.
    pub fn e(&self) -> u32 {
        self.e
    }

    /// `p^e`.
    pub fn p_power(&self) -> u64 {
        self.field.modulus().pow(self.e)
    }

    pub fn modulus_poly(&self) -> Polynomial {
        Polynomial::x_pow_minus(self.field, self.n, self.eta.value())
    }

    pub fn contains(&self, c: &Codeword) -> Result<bool, CodeError> {
        self.check_len(c.len())?;
        Ok(self.generator_poly.divides(&c.to_polynomial())?)
    }

    /// `m(x) g(x) mod (x^n - eta)`, for a message of `k` symbols.
    pub fn encode(&self, message: &[FieldElement]) -> Result<Codeword, CodeError> {
        let raw = Codeword::from_elements(self.field, message)?;
        self.encode_raw(raw.coords())
    }

    pub fn encode_raw(&self, message: &[u64]) -> Result<Codeword, CodeError> {
        if message.len() != self.k() {
            return Err(CodeError::LengthMismatch {
                expected: self.k(),
                actual: message.len(),
            });
        }
        let m = Polynomial::new(self.field, message.to_vec());
        let c = (&m * &self.generator_poly).rem(&self.modulus_poly())?;
        Codeword::from_polynomial(&c, self.n)
    }

    /// `g` itself as a codeword.
    pub fn generator_codeword(&self) -> Codeword {
        Codeword::from_polynomial(&self.generator_poly, self.n).expect("deg g <= n")
    }

    /// `(x_0, ..., x_{n-1}) -> (eta x_{n-1}, x_0, ..., x_{n-2})`.
    pub fn shift(&self, c: &Codeword) -> Result<Codeword, CodeError> {
        self.check_len(c.len())?;
        let f = self.field;
        let mut coords = Vec::with_capacity(self.n);
        coords.push(f.mul(self.eta.value(), c.coords[self.n - 1]));
        coords.extend_from_slice(&c.coords[..self.n - 1]);
        Ok(Codeword { field: f, coords })
    }

    /// Rows `x^i g(x)` for `i < k`; these are already reduced since `deg < n`.
    pub fn generator_rows(&self) -> Vec<Vec<u64>> {
        (0..self.k())
            .map(|i| {
                let mut row = vec![0u64; self.n];
                for (j, &c) in self.generator_poly.coeffs().iter().enumerate() {
                    row[i + j] = c;
                }
                row
            })
            .collect()
    }

    /// Number of codewords, `p^k`, or `None` on overflow.
    pub fn size(&self) -> Option<u64> {
        self.field
            .modulus()
            .checked_pow(u32::try_from(self.k()).ok()?)
    }

    /// Calls `visit` on every codeword, the zero word first, in base-`p` message order.
    pub fn for_each_codeword(&self, mut visit: impl FnMut(&[u64])) {
        let f = self.field;
        let p = f.modulus();
        let rows = self.generator_rows();
        let mut digits = vec![0u64; rows.len()];
        let mut word = vec![0u64; self.n];
        visit(&word);
        'outer: loop {
            for (i, d) in digits.iter_mut().enumerate() {
                *d += 1;
                for (w, &r) in word.iter_mut().zip(&rows[i]) {
                    *w = f.add(*w, r);
                }
                if *d < p {
                    visit(&word);
                    continue 'outer;
                }
                // p copies of row i were added, which is zero again
                *d = 0;
            }
            break;
        }
    }

    fn check_len(&self, len: usize) -> Result<(), CodeError> {
        if len != self.n {
            return Err(CodeError::LengthMismatch {
                expected: self.n,
                actual: len,
            });
        }
        Ok(())
    }
}

/// Linear systems "is there a codeword supported inside these positions".
///
/// Column `i` is the coefficient vector of `x^i mod g(x)`. A vector `a` on positions
/// `i_1 < ... < i_w` gives a codeword `sum a_j x^{i_j}` exactly when the corresponding columns
/// combine to zero, since every codeword is a multiple of `g` of degree `< n`.
#[derive(Debug, Clone)]
pub struct SupportSolver {
    field: PrimeField,
    n: usize,
    rows: usize,
    residues: Vec<u64>,
}

impl SupportSolver {
    pub fn new(code: &ConstacyclicCode) -> Self {
        let field = code.field;
        let g = &code.generator_poly;
        let rows = code.redundancy();
        let mut residues = vec![0u64; code.n * rows];
        if rows > 0 {
            // x^{i+1} mod g from x^i mod g by one shift-and-reduce step
            let lead_inv = field.inv(g.coeffs()[rows]).expect("monic");
            let mut cur = vec![0u64; rows];
            cur[0] = 1;
            for i in 0..code.n {
                residues[i * rows..(i + 1) * rows].copy_from_slice(&cur);
                let top = cur[rows - 1];
                cur.rotate_right(1);
                cur[0] = 0;
                if top != 0 {
                    let q = field.mul(top, lead_inv);
                    for (c, &gj) in cur.iter_mut().zip(g.coeffs()) {
                        *c = field.sub(*c, field.mul(q, gj));
                    }
                }
            }
        }
        Self {
            field,
            n: code.n,
            rows,
            residues,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of equations, `deg g`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// `x^i mod g` as a coefficient vector of length `deg g`.
    #[inline]
    pub fn column(&self, i: usize) -> &[u64] {
        &self.residues[i * self.rows..(i + 1) * self.rows]
    }

    /// True iff some nonzero codeword has support inside `positions`.
    #[inline]
    pub fn has_solution(&self, positions: &[usize], scratch: &mut RankScratch) -> bool {
        if positions.len() > self.rows {
            return true;
        }
        column_rank(
            &self.field,
            self.rows,
            positions.iter().map(|&i| self.column(i)),
            scratch,
        ) < positions.len()
    }

    /// Basis of all codewords supported inside `positions`, as length-`n` words.
    pub fn solve(&self, positions: &[usize]) -> Vec<Codeword> {
        let cols: Vec<&[u64]> = positions.iter().map(|&i| self.column(i)).collect();
        let m = Matrix::from_columns(self.rows, &cols);
        m.null_space(&self.field)
            .into_iter()
            .map(|v| {
                let mut coords = vec![0u64; self.n];
                for (&pos, &a) in positions.iter().zip(&v) {
                    coords[pos] = a;
                }
                Codeword {
                    field: self.field,
                    coords,
                }
            })
            .collect()
    }
}

/// Every monic divisor of `x^n - 1`, factored, for `n = l p^e`.
///
/// `x^l - 1` is squarefree, so each of its irreducible factors may appear with any multiplicity
/// in `0..=p^e`.
pub fn cyclic_generators(
    field: PrimeField,
    n: usize,
) -> Result<Vec<FactoredPolynomial>, CodeError> {
    if n == 0 {
        return Err(CodeError::BadLength);
    }
    let p = field.modulus() as usize;
    let (mut l, mut pe) = (n, 1usize);
    while l % p == 0 {
        l /= p;
        pe *= p;
    }
    let base = factorize(&Polynomial::x_pow_minus(field, l, 1))?;
    let irreducibles: Vec<Polynomial> = base.factors().iter().map(|(m, _)| m.clone()).collect();
    let mut mults = vec![0u64; irreducibles.len()];
    let mut out = Vec::new();
    loop {
        let factors = irreducibles
            .iter()
            .zip(&mults)
            .filter(|(_, &e)| e > 0)
            .map(|(m, &e)| (m.clone(), e as u32))
            .collect();
        out.push(FactoredPolynomial::new(field, factors)?);
        if !crate::algebra::odometer(&mut mults, pe as u64 + 1) {
            break;
        }
    }
    Ok(out)
}

/// JSON code description: `{"p", "n", "eta", "factors": [{"coeffs", "mult"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpec {
    pub p: u64,
    pub n: usize,
    pub eta: i64,
    pub factors: Vec<FactorSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    /// Comma-separated coefficients, constant term first.
    pub coeffs: String,
    pub mult: u32,
}

impl CodeSpec {
    pub fn build(&self) -> Result<ConstacyclicCode, CodeError> {
        let field = PrimeField::new(self.p)?;
        let factors = self
            .factors
            .iter()
            .map(|f| Ok((Polynomial::parse(field, &f.coeffs)?, f.mult)))
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        let generator = FactoredPolynomial::new(field, factors)?;
        ConstacyclicCode::new(field, self.n, field.elem(self.eta), generator)
    }

    pub fn from_code(code: &ConstacyclicCode) -> Self {
        Self {
            p: code.field.modulus(),
            n: code.n,
            eta: code.eta.value() as i64,
            factors: code
                .generator
                .factors()
                .iter()
                .map(|(m, e)| FactorSpec {
                    coeffs: m.to_text(),
                    mult: *e,
                })
                .collect(),
        }
    }
}
