//! Symbol-pair read vectors, weights, and distances.
//!
//! All functions take vectors as canonical residues; only the zero/nonzero pattern matters
//! for the weights.

use thiserror::Error;

use crate::algebra::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("pair operations need length >= 2, got {0}")]
    TooShort(usize),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("{what} out of range")]
    OutOfRange { what: &'static str },
}

/// The cyclic sequence `((x_0, x_1), (x_1, x_2), ..., (x_{n-1}, x_0))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReadVector {
    pairs: Vec<(u64, u64)>,
}

impl PairReadVector {
    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// A maximal cyclic block of nonzero coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Run {
    pub start: usize,
    pub len: usize,
}

/// Maximal nonzero runs, sorted by start. A run that wraps past `n - 1` keeps its true start
/// index, so it sorts last.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RunProfile {
    pub runs: Vec<Run>,
    pub full_support: bool,
}

impl RunProfile {
    pub fn weight(&self) -> usize {
        self.runs.iter().map(|r| r.len).sum()
    }

    pub fn run_count(&self) -> usize {
        self.runs.len()
    }
}

pub fn hamming_weight(x: &[u64]) -> usize {
    x.iter().filter(|&&v| v != 0).count()
}

pub fn pair_read(x: &[u64]) -> Result<PairReadVector, MetricError> {
    let n = x.len();
    if n < 2 {
        return Err(MetricError::TooShort(n));
    }
    Ok(PairReadVector {
        pairs: (0..n).map(|i| (x[i], x[(i + 1) % n])).collect(),
    })
}

pub fn pair_weight(x: &[u64]) -> Result<usize, MetricError> {
    let n = x.len();
    if n < 2 {
        return Err(MetricError::TooShort(n));
    }
    Ok((0..n).filter(|&i| x[i] != 0 || x[(i + 1) % n] != 0).count())
}

pub fn pair_distance(field: &PrimeField, x: &[u64], y: &[u64]) -> Result<usize, MetricError> {
    if x.len() != y.len() {
        return Err(MetricError::LengthMismatch(x.len(), y.len()));
    }
    let diff: Vec<u64> = x.iter().zip(y).map(|(&a, &b)| field.sub(a, b)).collect();
    pair_weight(&diff)
}

pub fn run_profile(x: &[u64]) -> RunProfile {
    let n = x.len();
    if n > 0 && x.iter().all(|&v| v != 0) {
        return RunProfile {
            runs: vec![Run { start: 0, len: n }],
            full_support: true,
        };
    }
    let mut runs = Vec::new();
    // walk from just after some zero so no run is split at the wraparound
    let Some(z) = x.iter().position(|&v| v == 0) else {
        return RunProfile {
            runs,
            full_support: false,
        };
    };
    let mut i = 1;
    while i <= n {
        let idx = (z + i) % n;
        if x[idx] != 0 {
            let start = idx;
            let mut len = 0;
            while i <= n && x[(z + i) % n] != 0 {
                len += 1;
                i += 1;
            }
            runs.push(Run { start, len });
        } else {
            i += 1;
        }
    }
    runs.sort();
    RunProfile {
        runs,
        full_support: false,
    }
}

/// Singleton-type bound with equality: `k = n - d_p + 2`.
pub fn is_mds_pair(n: usize, k: usize, dp: usize) -> Result<bool, MetricError> {
    if dp < 2 || dp > n {
        return Err(MetricError::OutOfRange { what: "d_p" });
    }
    Ok(k + dp == n + 2)
}

/// `(d_H + 1, 2 d_H)`, valid for `0 < d_H < n`.
pub fn pair_distance_bounds(dh: usize, n: usize) -> Result<(usize, usize), MetricError> {
    if dh == 0 || dh >= n {
        return Err(MetricError::OutOfRange { what: "d_H" });
    }
    Ok((dh + 1, 2 * dh))
}

/// Hamming MDS: `k = n - d_H + 1`.
pub fn is_mds_hamming(n: usize, k: usize, dh: usize) -> bool {
    k + dh == n + 1
}
