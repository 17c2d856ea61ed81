//! Exact minimum symbol-pair distance by exhaustive support search.
//!
//! A nonzero word that is not of full support has pair weight `w + r` (Hamming weight plus
//! number of runs). The search walks pair-weight levels `d_H + 1, d_H + 2, ...`; at level `L`
//! it visits every support pattern with `w + r = L` and `w >= d_H`, asking whether some nonzero
//! codeword lives inside it. Pair weight is monotone under shrinking the support, so if every
//! pattern below `L` is empty and one at `L` is not, the minimum pair distance is exactly `L`.
//! A minimum-weight codeword has pair weight at most `2 d_H`, so the walk stops by then, or at
//! `n` when `2 d_H >= n`.

mod pattern;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::linalg::RankScratch;
use crate::code::{Codeword, ConstacyclicCode, SupportSolver};
use crate::distance::{self, check_brute_force_size, Distance, DistanceError};
use crate::metric::{self, pair_weight};

pub use pattern::{class_size, enumerate_patterns, StartCursor, SupportPattern};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairSearchError {
    #[error("no supports of weight {w} with {r} runs fit in length {n}")]
    Infeasible { n: usize, w: usize, r: usize },
    #[error("degenerate code (k = {k}, d_H = {d_h}): pair search needs k >= 1 and d_H >= 2")]
    DegenerateCode { k: usize, d_h: usize },
    #[error("Singleton equality fails: k = {k}, but n - d_p + 2 = {expected} for d_p = {target}")]
    DimensionMismatch {
        k: usize,
        expected: usize,
        target: usize,
    },
    #[error("target pair distance {target} out of range 2..={n}")]
    TargetOutOfRange { target: usize, n: usize },
    #[error("pair distance is {found}, not the target {target}")]
    TargetMismatch {
        target: usize,
        found: usize,
        certificate: Box<PairDistanceCertificate>,
    },
    #[error("search exhausted every level up to 2 d_H = {0} without a codeword")]
    SearchExhausted(usize),
    #[error(transparent)]
    Distance(#[from] DistanceError),
    #[error(transparent)]
    Metric(#[from] metric::MetricError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchOptions {
    /// Split each class over first-run start indices with rayon.
    pub parallel: bool,
}

impl SearchOptions {
    pub fn sequential() -> Self {
        Self { parallel: false }
    }

    pub fn parallel() -> Self {
        Self { parallel: true }
    }
}

/// Scan record for one `(w, r)` class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassStats {
    pub w: usize,
    pub r: usize,
    /// Patterns examined, in scan order, up to and including the first solvable one.
    pub patterns: u64,
    /// Solvable patterns among those examined (0 or 1).
    pub solvable: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDistanceCertificate {
    pub d_p: usize,
    pub d_h: usize,
    pub n: usize,
    pub k: usize,
    /// A codeword of pair weight `d_p`.
    pub witness: Option<Codeword>,
    /// Every class scanned, in scan order.
    pub classes: Vec<ClassStats>,
    pub is_mds_pair: bool,
}

impl PairDistanceCertificate {
    /// Classes that were scanned completely and held no codeword.
    pub fn excluded_classes(&self) -> impl Iterator<Item = &ClassStats> {
        self.classes.iter().filter(|c| c.solvable == 0)
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson::from(self)
    }
}

/// Serialized certificate: `{dp, dh, mds, witness, classes}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub dp: usize,
    pub dh: usize,
    pub mds: bool,
    pub witness: Option<Vec<u64>>,
    pub classes: Vec<ClassStats>,
}

impl From<&PairDistanceCertificate> for CertificateJson {
    fn from(c: &PairDistanceCertificate) -> Self {
        Self {
            dp: c.d_p,
            dh: c.d_h,
            mds: c.is_mds_pair,
            witness: c.witness.as_ref().map(|w| w.coords().to_vec()),
            classes: c.classes.clone(),
        }
    }
}

/// Basis of the codewords supported inside `pattern`.
///
/// A basis vector may vanish on part of the pattern; callers re-profile before classifying.
pub fn null_space_on_support(code: &ConstacyclicCode, pattern: &SupportPattern) -> Vec<Codeword> {
    SupportSolver::new(code).solve(&pattern.positions())
}

pub fn exact_pair_distance(
    code: &ConstacyclicCode,
) -> Result<PairDistanceCertificate, PairSearchError> {
    exact_pair_distance_with(code, SearchOptions::default(), |_| {})
}

/// Like [`exact_pair_distance`], reporting each finished class to `progress`.
pub fn exact_pair_distance_with(
    code: &ConstacyclicCode,
    opts: SearchOptions,
    mut progress: impl FnMut(&ClassStats),
) -> Result<PairDistanceCertificate, PairSearchError> {
    let (n, k) = (code.n(), code.k());
    if k == 0 || n < 2 {
        return Err(PairSearchError::DegenerateCode { k, d_h: 0 });
    }
    let d_h = distance::minimum_distance(code)?;
    if d_h < 2 {
        return Err(PairSearchError::DegenerateCode { k, d_h });
    }
    let finish = |d_p: usize, witness: Codeword, classes: Vec<ClassStats>| {
        let is_mds_pair = metric::is_mds_pair(n, k, d_p)?;
        Ok(PairDistanceCertificate {
            d_p,
            d_h,
            n,
            k,
            witness: Some(witness),
            classes,
            is_mds_pair,
        })
    };
    if d_h == n {
        // every nonzero codeword has full support
        return finish(n, code.generator_codeword(), Vec::new());
    }

    let solver = SupportSolver::new(code);
    let mut classes = Vec::new();
    let top = (2 * d_h).min(n);
    for level in d_h + 1..=top {
        for w in d_h..level {
            let r = level - w;
            if r > w || w + r > n {
                continue;
            }
            let (stats, witness) = scan_class(&solver, w, r, opts);
            progress(&stats);
            classes.push(stats);
            if let Some(witness) = witness {
                let d_p = pair_weight(witness.coords())?;
                debug_assert_eq!(d_p, level, "lower levels were empty");
                return finish(d_p, witness, classes);
            }
        }
        if level == n {
            // only full-support codewords remain
            return finish(n, code.generator_codeword(), classes);
        }
    }
    Err(PairSearchError::SearchExhausted(2 * d_h))
}

/// Scans one class; stops at the first solvable pattern in scan order.
fn scan_class(
    solver: &SupportSolver,
    w: usize,
    r: usize,
    opts: SearchOptions,
) -> (ClassStats, Option<Codeword>) {
    let n = solver.n();
    let per_start = |s: usize| -> (u64, Option<Codeword>) {
        let mut cur = StartCursor::new(n, w, r, s);
        let mut scratch = RankScratch::default();
        let mut count = 0u64;
        while cur.advance() {
            count += 1;
            if solver.has_solution(cur.positions(), &mut scratch) {
                return (count, Some(lightest(solver.solve(cur.positions()))));
            }
        }
        (count, None)
    };
    let results: Vec<(u64, Option<Codeword>)> = if opts.parallel {
        (0..n).into_par_iter().map(per_start).collect()
    } else {
        let mut out = Vec::with_capacity(n);
        for s in 0..n {
            let res = per_start(s);
            let hit = res.1.is_some();
            out.push(res);
            if hit {
                break;
            }
        }
        out
    };
    let mut patterns = 0u64;
    for (count, witness) in results {
        patterns += count;
        if witness.is_some() {
            return (
                ClassStats {
                    w,
                    r,
                    patterns,
                    solvable: 1,
                },
                witness,
            );
        }
    }
    (
        ClassStats {
            w,
            r,
            patterns,
            solvable: 0,
        },
        None,
    )
}

/// Basis vector of least pair weight; the first one on ties.
fn lightest(basis: Vec<Codeword>) -> Codeword {
    basis
        .into_iter()
        .min_by_key(|c| pair_weight(c.coords()).unwrap_or(usize::MAX))
        .expect("solvable pattern has a nonempty null space")
}

/// Checks Singleton equality for `target`, then runs the exact search and compares.
pub fn verify_mds_pair(
    code: &ConstacyclicCode,
    target: usize,
    opts: SearchOptions,
    progress: impl FnMut(&ClassStats),
) -> Result<PairDistanceCertificate, PairSearchError> {
    let (n, k) = (code.n(), code.k());
    if target < 2 || target > n {
        return Err(PairSearchError::TargetOutOfRange { target, n });
    }
    if k + target != n + 2 {
        return Err(PairSearchError::DimensionMismatch {
            k,
            expected: n + 2 - target,
            target,
        });
    }
    let cert = exact_pair_distance_with(code, opts, progress)?;
    if cert.d_p != target {
        return Err(PairSearchError::TargetMismatch {
            target,
            found: cert.d_p,
            certificate: Box::new(cert),
        });
    }
    Ok(cert)
}

/// Minimum pair weight over all nonzero codewords; `Infinite` for the zero code.
pub fn dp_bruteforce(code: &ConstacyclicCode) -> Result<Distance, PairSearchError> {
    if code.n() < 2 {
        return Err(metric::MetricError::TooShort(code.n()).into());
    }
    check_brute_force_size(code)?;
    let mut best = usize::MAX;
    code.for_each_codeword(|w| {
        let wp = pair_weight(w).expect("n >= 2");
        if wp > 0 && wp < best {
            best = wp;
        }
    });
    Ok(if best == usize::MAX {
        Distance::Infinite
    } else {
        Distance::Finite(best)
    })
}
