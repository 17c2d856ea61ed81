//! Minimum Hamming distance of repeated-root cyclic codes.
//!
//! For `C = <g>` of length `n = l p^e` with `g = prod m_i^{e_i}`, the distance is
//! `min_t P_t * d_H(C_t)` over `0 <= t < p^e`, where `C_t` is the simple-root code of length `l`
//! generated by the product of the `m_i` with `e_i > t` and `P_t = w_H((x - 1)^t)`. The
//! simple-root distances are computed exactly, by enumeration.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::linalg::RankScratch;
use crate::algebra::{FactoredPolynomial, Polynomial, PrimeField};
use crate::code::{CodeError, Codeword, ConstacyclicCode, SupportSolver};
use crate::metric::hamming_weight;

/// Bar codes with at most this many codewords are enumerated outright.
pub const BAR_EXHAUSTIVE_CAP: u64 = 1_000_000;
/// Largest code accepted by the brute-force oracles.
pub const BRUTE_FORCE_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistanceError {
    #[error("the level formula needs a cyclic code (eta = 1)")]
    NotCyclic,
    #[error("gcd(n, p) = 1: simple-root code, use the bar distance directly")]
    SimpleRoot,
    #[error("level {t} out of range 0..{bound}")]
    LevelOutOfRange { t: u64, bound: u64 },
    #[error("the zero codeword has no weight decomposition")]
    ZeroCodeword,
    #[error("the code is {{0}} and has no minimum distance")]
    ZeroCode,
    #[error("code has {size} codewords, above the brute-force cap {cap}")]
    TooLarge { size: String, cap: u64 },
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// A distance that may be infinite (the zero code). `Infinite` absorbs multiplication.
///
/// Serialized as a number, or the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "DistanceRepr", into = "DistanceRepr")]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum DistanceRepr {
    Finite(usize),
    Text(String),
}

impl From<Distance> for DistanceRepr {
    fn from(d: Distance) -> Self {
        match d {
            Distance::Finite(d) => DistanceRepr::Finite(d),
            Distance::Infinite => DistanceRepr::Text("inf".into()),
        }
    }
}

impl TryFrom<DistanceRepr> for Distance {
    type Error = String;
    fn try_from(r: DistanceRepr) -> Result<Self, String> {
        match r {
            DistanceRepr::Finite(d) => Ok(Distance::Finite(d)),
            DistanceRepr::Text(s) if s == "inf" => Ok(Distance::Infinite),
            DistanceRepr::Text(s) => Err(format!("expected a number or \"inf\", got {s:?}")),
        }
    }
}

impl Mul<u64> for Distance {
    type Output = Distance;
    fn mul(self, rhs: u64) -> Distance {
        match self {
            Distance::Finite(d) => Distance::Finite(d * rhs as usize),
            Distance::Infinite => Distance::Infinite,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// `P_t`: product of `digit + 1` over the base-`p` digits of `t`.
pub fn radix_weight(mut t: u64, p: u64) -> u64 {
    let mut acc = 1;
    while t > 0 {
        acc *= t % p + 1;
        t /= p;
    }
    acc
}

/// The simple-root code `C_t` of length `l` attached to level `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarCode {
    pub t: u64,
    pub generator: FactoredPolynomial,
    pub l: usize,
    pub distance: Distance,
}

impl BarCode {
    pub fn generator_poly(&self) -> Polynomial {
        self.generator.expand()
    }
}

pub fn bar_code(code: &ConstacyclicCode, t: u64) -> Result<BarCode, DistanceError> {
    if !code.is_cyclic() {
        return Err(DistanceError::NotCyclic);
    }
    let bound = code.p_power();
    if t >= bound {
        return Err(DistanceError::LevelOutOfRange { t, bound });
    }
    let generator = code.generator().radical_above(t);
    let distance = bar_distance(code.field(), code.l(), &generator)?;
    Ok(BarCode {
        t,
        generator,
        l: code.l(),
        distance,
    })
}

/// Exact minimum distance of the cyclic code `<g>` of length `l`; `Infinite` if `g = x^l - 1`.
pub fn bar_distance(
    field: PrimeField,
    l: usize,
    generator: &FactoredPolynomial,
) -> Result<Distance, DistanceError> {
    let deg = generator.degree();
    if deg == 0 {
        return Ok(Distance::Finite(1));
    }
    if deg >= l {
        return Ok(Distance::Infinite);
    }
    let bar = ConstacyclicCode::cyclic(field, l, generator.clone())?;
    match bar.size() {
        Some(size) if size <= BAR_EXHAUSTIVE_CAP => Ok(min_weight_exhaustive(&bar)),
        _ => Ok(min_weight_by_supports(&bar)),
    }
}

fn min_weight_exhaustive(code: &ConstacyclicCode) -> Distance {
    let mut best = usize::MAX;
    code.for_each_codeword(|w| {
        let wt = hamming_weight(w);
        if wt > 0 && wt < best {
            best = wt;
        }
    });
    if best == usize::MAX {
        Distance::Infinite
    } else {
        Distance::Finite(best)
    }
}

/// Smallest `w` such that some `w` positions carry a nonzero codeword.
pub fn min_weight_by_supports(code: &ConstacyclicCode) -> Distance {
    if code.k() == 0 {
        return Distance::Infinite;
    }
    let solver = SupportSolver::new(code);
    let n = code.n();
    let mut scratch = RankScratch::default();
    // Singleton: any redundancy + 1 positions are dependent
    for w in 1..=code.redundancy() + 1 {
        let mut pos: Vec<usize> = (0..w).collect();
        loop {
            if solver.has_solution(&pos, &mut scratch) {
                return Distance::Finite(w);
            }
            if !next_combination(&mut pos, n) {
                break;
            }
        }
    }
    unreachable!("redundancy + 1 columns are always dependent")
}

/// Lexicographic successor of a sorted `w`-subset of `0..n`.
pub(crate) fn next_combination(pos: &mut [usize], n: usize) -> bool {
    let w = pos.len();
    for i in (0..w).rev() {
        if pos[i] < n - w + i {
            pos[i] += 1;
            for j in i + 1..w {
                pos[j] = pos[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// One row of the level table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Level {
    pub t: u64,
    pub p_t: u64,
    pub bar_distance: Distance,
    pub product: Distance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceCertificate {
    pub d_h: usize,
    /// First level attaining the minimum.
    pub witness_t: u64,
    pub levels: Vec<Level>,
}

/// Exact `d_H` of a repeated-root cyclic code from the level table.
///
/// Every level is evaluated so the certificate carries the whole table; bar distances are
/// memoized because `C_t` only changes when `t` crosses one of the multiplicities.
pub fn dh_repeated_root(code: &ConstacyclicCode) -> Result<DistanceCertificate, DistanceError> {
    if !code.is_cyclic() {
        return Err(DistanceError::NotCyclic);
    }
    if code.e() == 0 {
        return Err(DistanceError::SimpleRoot);
    }
    let p = code.field().modulus();
    let mut cache: Vec<(usize, Distance)> = Vec::new();
    let mut levels = Vec::with_capacity(code.p_power() as usize);
    for t in 0..code.p_power() {
        let kept = code
            .generator()
            .factors()
            .iter()
            .filter(|(_, e)| *e as u64 > t)
            .count();
        // the kept sets shrink as t grows, so their size identifies C_t
        let bar = match cache.iter().find(|(c, _)| *c == kept) {
            Some(&(_, d)) => d,
            None => {
                let d = bar_distance(code.field(), code.l(), &code.generator().radical_above(t))?;
                cache.push((kept, d));
                d
            }
        };
        let p_t = radix_weight(t, p);
        levels.push(Level {
            t,
            p_t,
            bar_distance: bar,
            product: bar * p_t,
        });
    }
    let best = levels
        .iter()
        .min_by_key(|lv| lv.product)
        .expect("at least one level");
    let d_h = best.product.finite().ok_or(DistanceError::ZeroCode)?;
    Ok(DistanceCertificate {
        d_h,
        witness_t: best.t,
        levels,
    })
}

/// Exact `d_H` of any code: the level formula for repeated-root cyclic codes, otherwise
/// enumeration.
pub fn minimum_distance(code: &ConstacyclicCode) -> Result<usize, DistanceError> {
    if code.is_cyclic() && code.e() > 0 {
        return dh_repeated_root(code).map(|c| c.d_h);
    }
    let d = match code.size() {
        Some(size) if size <= BAR_EXHAUSTIVE_CAP => min_weight_exhaustive(code),
        _ => min_weight_by_supports(code),
    };
    d.finite().ok_or(DistanceError::ZeroCode)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDecomposition {
    /// Largest `t` with `(x^l - 1)^t | c`.
    pub t: u64,
    /// `c / (x^l - 1)^t`.
    pub v: Polynomial,
    /// `w_H(v mod (x^l - 1))`.
    pub n_v: usize,
}

pub fn weight_decomposition(
    code: &ConstacyclicCode,
    c: &Codeword,
) -> Result<WeightDecomposition, DistanceError> {
    if c.len() != code.n() {
        return Err(CodeError::LengthMismatch {
            expected: code.n(),
            actual: c.len(),
        }
        .into());
    }
    if c.is_zero() {
        return Err(DistanceError::ZeroCodeword);
    }
    let base = Polynomial::x_pow_minus(code.field(), code.l(), 1);
    let mut v = c.to_polynomial();
    let mut t = 0;
    loop {
        let (q, r) = v.divmod(&base).map_err(CodeError::from)?;
        if !r.is_zero() {
            let n_v = r.hamming_weight();
            return Ok(WeightDecomposition { t, v, n_v });
        }
        v = q;
        t += 1;
    }
}

/// Minimum Hamming weight over all nonzero codewords; `Infinite` for the zero code.
pub fn dh_bruteforce(code: &ConstacyclicCode) -> Result<Distance, DistanceError> {
    check_brute_force_size(code)?;
    Ok(min_weight_exhaustive(code))
}

pub(crate) fn check_brute_force_size(code: &ConstacyclicCode) -> Result<(), DistanceError> {
    match code.size() {
        Some(s) if s <= BRUTE_FORCE_CAP => Ok(()),
        s => Err(DistanceError::TooLarge {
            size: s.map_or_else(
                || format!("{}^{}", code.field().modulus(), code.k()),
                |s| s.to_string(),
            ),
            cap: BRUTE_FORCE_CAP,
        }),
    }
}
