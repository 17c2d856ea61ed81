//! Cyclic supports with a prescribed number of nonzero runs.

use crate::metric::Run;

use super::PairSearchError;

/// A cyclic support given as maximal runs. Runs are listed from the one with the smallest
/// start index, which matches [`crate::metric::run_profile`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupportPattern {
    pub n: usize,
    pub runs: Vec<Run>,
}

impl SupportPattern {
    /// Hamming weight of any word with exactly this support.
    pub fn w(&self) -> usize {
        self.runs.iter().map(|r| r.len).sum()
    }

    pub fn r(&self) -> usize {
        self.runs.len()
    }

    /// Pair weight of any word with exactly this support.
    pub fn pair_weight(&self) -> usize {
        self.w() + self.r()
    }

    pub fn positions(&self) -> Vec<usize> {
        self.runs
            .iter()
            .flat_map(|run| (0..run.len).map(move |q| (run.start + q) % self.n))
            .collect()
    }
}

/// First composition of `total` into `parts` positive parts in lexicographic order.
fn first_composition(total: usize, parts: usize) -> Option<Vec<usize>> {
    if parts == 0 || total < parts {
        return None;
    }
    let mut c = vec![1; parts];
    c[parts - 1] = total - (parts - 1);
    Some(c)
}

/// Lexicographic successor of a composition (the sum is preserved).
fn next_composition(c: &mut [usize]) -> bool {
    let r = c.len();
    if r < 2 {
        return false;
    }
    let total: usize = c.iter().sum();
    let mut slack = c[r - 1] - 1;
    for i in (0..r - 1).rev() {
        if slack >= 1 {
            c[i] += 1;
            for v in &mut c[i + 1..r - 1] {
                *v = 1;
            }
            c[r - 1] = total - c[..r - 1].iter().sum::<usize>();
            return true;
        }
        slack += c[i] - 1;
    }
    false
}

/// Walks every pattern of a `(w, r)` class whose first run starts at a fixed index `s`.
///
/// Patterns come in lexicographic order of (run lengths, gap lengths). For `s` to be the
/// smallest start, the last run must not start at or past `n`, i.e. `s < L_last + G_last`.
#[derive(Debug, Clone)]
pub struct StartCursor {
    n: usize,
    w: usize,
    r: usize,
    s: usize,
    lens: Vec<usize>,
    gaps: Vec<usize>,
    /// Added to the last gap to enforce the start constraint.
    extra: usize,
    state: CursorState,
    positions: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CursorState {
    Fresh,
    Active,
    Done,
}

impl StartCursor {
    pub fn new(n: usize, w: usize, r: usize, s: usize) -> Self {
        Self {
            n,
            w,
            r,
            s,
            lens: Vec::new(),
            gaps: Vec::new(),
            extra: 0,
            state: CursorState::Fresh,
            positions: Vec::with_capacity(w),
        }
    }

    /// Moves to the next pattern; false when the start index is exhausted.
    pub fn advance(&mut self) -> bool {
        match self.state {
            CursorState::Done => false,
            CursorState::Fresh => {
                self.state = CursorState::Active;
                match first_composition(self.w, self.r) {
                    Some(lens) if self.s < self.n => self.lens = lens,
                    _ => {
                        self.state = CursorState::Done;
                        return false;
                    }
                }
                if self.reset_gaps() {
                    self.fill();
                    true
                } else {
                    self.advance_lens()
                }
            }
            CursorState::Active => {
                if next_composition(&mut self.gaps) {
                    self.fill();
                    true
                } else {
                    self.advance_lens()
                }
            }
        }
    }

    fn advance_lens(&mut self) -> bool {
        loop {
            if !next_composition(&mut self.lens) {
                self.state = CursorState::Done;
                return false;
            }
            if self.reset_gaps() {
                self.fill();
                return true;
            }
        }
    }

    fn reset_gaps(&mut self) -> bool {
        let last_len = self.lens[self.r - 1];
        let min_last_gap = (self.s + 1).saturating_sub(last_len).max(1);
        let free = self.n - self.w;
        if free + 1 < min_last_gap {
            return false;
        }
        match first_composition(free - (min_last_gap - 1), self.r) {
            Some(g) => {
                self.gaps = g;
                self.extra = min_last_gap - 1;
                true
            }
            None => false,
        }
    }

    fn fill(&mut self) {
        self.positions.clear();
        let mut pos = self.s;
        for j in 0..self.r {
            for q in 0..self.lens[j] {
                self.positions.push((pos + q) % self.n);
            }
            pos += self.lens[j] + self.gap(j);
        }
    }

    fn gap(&self, j: usize) -> usize {
        if j + 1 == self.r {
            self.gaps[j] + self.extra
        } else {
            self.gaps[j]
        }
    }

    /// Support positions of the current pattern, in run order.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn pattern(&self) -> SupportPattern {
        let mut runs = Vec::with_capacity(self.r);
        let mut pos = self.s;
        for j in 0..self.r {
            runs.push(Run {
                start: pos,
                len: self.lens[j],
            });
            pos += self.lens[j] + self.gap(j);
        }
        SupportPattern { n: self.n, runs }
    }
}

pub(crate) fn check_class(n: usize, w: usize, r: usize) -> Result<(), PairSearchError> {
    if r == 0 || r > w || w + r > n {
        return Err(PairSearchError::Infeasible { n, w, r });
    }
    Ok(())
}

/// Every cyclic support of weight `w` with exactly `r` runs, each once, ordered by
/// (first run start, run lengths, gap lengths).
pub fn enumerate_patterns(
    n: usize,
    w: usize,
    r: usize,
) -> Result<impl Iterator<Item = SupportPattern>, PairSearchError> {
    check_class(n, w, r)?;
    Ok((0..n).flat_map(move |s| {
        let mut cur = StartCursor::new(n, w, r, s);
        std::iter::from_fn(move || cur.advance().then(|| cur.pattern()))
    }))
}

/// Number of supports in a `(w, r)` class: `n/r * C(w-1, r-1) * C(n-w-1, r-1)`.
pub fn class_size(n: usize, w: usize, r: usize) -> u128 {
    if check_class(n, w, r).is_err() {
        return 0;
    }
    let num = n as u128 * binom(w - 1, r - 1) * binom(n - w - 1, r - 1);
    num / r as u128
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::run_profile;
    use std::collections::{HashMap, HashSet};

    /// Classifies all 2^n zero/nonzero masks by (w, r).
    fn mask_classes(n: usize) -> HashMap<(usize, usize), HashSet<Vec<usize>>> {
        let mut out: HashMap<_, HashSet<_>> = HashMap::new();
        for mask in 0u32..(1 << n) {
            let v: Vec<u64> = (0..n).map(|i| ((mask >> i) & 1) as u64).collect();
            let prof = run_profile(&v);
            if prof.full_support || prof.runs.is_empty() {
                continue;
            }
            let pos: Vec<usize> = (0..n).filter(|&i| v[i] != 0).collect();
            out.entry((prof.weight(), prof.run_count()))
                .or_default()
                .insert(pos);
        }
        out
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_patterns(6, 2, 1).unwrap().count(), 6);
        assert_eq!(enumerate_patterns(6, 2, 2).unwrap().count(), 9);
        assert_eq!(enumerate_patterns(5, 4, 1).unwrap().count(), 5);
        assert!(matches!(
            enumerate_patterns(5, 3, 3),
            Err(PairSearchError::Infeasible { .. })
        ));
        assert!(enumerate_patterns(5, 3, 0).is_err());
        assert!(enumerate_patterns(5, 2, 3).is_err());
    }

    #[test]
    fn matches_mask_enumeration() {
        for n in 2..=12 {
            let classes = mask_classes(n);
            for w in 1..n {
                for r in 1..=w {
                    if w + r > n {
                        continue;
                    }
                    let got: Vec<SupportPattern> = enumerate_patterns(n, w, r).unwrap().collect();
                    let mut seen = HashSet::new();
                    for p in &got {
                        assert_eq!((p.w(), p.r()), (w, r));
                        let mut pos = p.positions();
                        pos.sort();
                        // canonical form agrees with the run profile of the support
                        let mut v = vec![0u64; n];
                        for &i in &pos {
                            v[i] = 1;
                        }
                        assert_eq!(run_profile(&v).runs, p.runs);
                        assert!(seen.insert(pos), "duplicate pattern {p:?}");
                    }
                    let expected = classes.get(&(w, r)).cloned().unwrap_or_default();
                    assert_eq!(seen, expected, "n={n} w={w} r={r}");
                    assert_eq!(class_size(n, w, r), got.len() as u128);
                }
            }
        }
    }

    #[test]
    fn order_is_lexicographic() {
        let pats: Vec<SupportPattern> = enumerate_patterns(9, 4, 2).unwrap().collect();
        let keys: Vec<(usize, Vec<usize>, Vec<usize>)> = pats
            .iter()
            .map(|p| {
                let lens = p.runs.iter().map(|r| r.len).collect();
                let gaps = (0..p.r())
                    .map(|j| {
                        let end = p.runs[j].start + p.runs[j].len;
                        let next = if j + 1 < p.r() {
                            p.runs[j + 1].start
                        } else {
                            p.runs[0].start + p.n
                        };
                        next - end
                    })
                    .collect();
                (p.runs[0].start, lens, gaps)
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn compositions() {
        let mut c = first_composition(5, 3).unwrap();
        let mut all = vec![c.clone()];
        while next_composition(&mut c) {
            all.push(c.clone());
        }
        assert_eq!(all.len(), 6); // C(4, 2)
        assert_eq!(all[0], vec![1, 1, 3]);
        assert_eq!(all[5], vec![3, 1, 1]);
    }
}
