//! Gaussian elimination over `F_p` for small dense matrices.

use super::PrimeField;

/// Row-major dense matrix of canonical residues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[&[u64]]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    /// Reduces in place to reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, f: &PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(piv) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if piv != row {
                for j in 0..self.cols {
                    self.data.swap(piv * self.cols + j, row * self.cols + j);
                }
            }
            let inv = f.inv(self.get(row, col)).expect("pivot is nonzero");
            for j in col..self.cols {
                let v = f.mul(self.get(row, j), inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                for j in col..self.cols {
                    let v = f.sub(self.get(r, j), f.mul(factor, self.get(row, j)));
                    self.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &PrimeField) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of the right null space `{ a : M a = 0 }`, one vector per free column.
    pub fn null_space(&self, f: &PrimeField) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    pub fn mul_vec(&self, f: &PrimeField, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).fold(0, |acc, j| f.add(acc, f.mul(self.get(i, j), v[j]))))
            .collect()
    }
}

/// Reusable buffers for [`column_rank`].
#[derive(Debug, Default, Clone)]
pub struct RankScratch {
    basis: Vec<u64>,
    pivots: Vec<usize>,
    work: Vec<u64>,
}

/// Rank of a set of columns of length `rows`, without building a [`Matrix`].
///
/// Columns are inserted one at a time into an echelon basis; stops once the rank reaches `rows`.
pub fn column_rank<'a>(
    f: &PrimeField,
    rows: usize,
    columns: impl Iterator<Item = &'a [u64]>,
    scratch: &mut RankScratch,
) -> usize {
    let RankScratch {
        basis,
        pivots,
        work,
    } = scratch;
    basis.clear();
    pivots.clear();
    work.clear();
    work.resize(rows, 0);
    for col in columns {
        work.copy_from_slice(col);
        for (b, &pc) in pivots.iter().enumerate() {
            let c = work[pc];
            if c != 0 {
                let row = &basis[b * rows..(b + 1) * rows];
                for (w, &r) in work.iter_mut().zip(row) {
                    if r != 0 {
                        *w = f.sub(*w, f.mul(c, r));
                    }
                }
            }
        }
        if let Some(pc) = work.iter().position(|&v| v != 0) {
            let inv = f.inv(work[pc]).expect("nonzero");
            for v in work.iter_mut() {
                *v = f.mul(*v, inv);
            }
            basis.extend_from_slice(work);
            pivots.push(pc);
            if pivots.len() == rows {
                break;
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn null_space_of_simple_system() {
        let f5 = f(5);
        // [1 1 1; 0 1 2] has kernel spanned by (1, -2, 1)
        let m = Matrix::from_columns(2, &[&[1, 0], &[1, 1], &[1, 2]]);
        let ns = m.null_space(&f5);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![1, 3, 1]);
        assert_eq!(m.mul_vec(&f5, &ns[0]), vec![0, 0]);
        assert_eq!(m.rank(&f5), 2);
    }

    #[test]
    fn full_rank_square_has_trivial_kernel() {
        let f7 = f(7);
        let m = Matrix::from_columns(3, &[&[1, 0, 0], &[1, 1, 0], &[1, 1, 1]]);
        assert!(m.null_space(&f7).is_empty());
    }

    fn arb_matrix(p: u64) -> impl Strategy<Value = (usize, Vec<Vec<u64>>)> {
        (1usize..7, 1usize..9).prop_flat_map(move |(rows, cols)| {
            (
                Just(rows),
                proptest::collection::vec(proptest::collection::vec(0..p, rows), cols),
            )
        })
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_killed((rows, cols) in arb_matrix(7)) {
            let f7 = f(7);
            let refs: Vec<&[u64]> = cols.iter().map(|c| c.as_slice()).collect();
            let m = Matrix::from_columns(rows, &refs);
            let ns = m.null_space(&f7);
            prop_assert_eq!(ns.len() + m.rank(&f7), cols.len());
            for v in &ns {
                prop_assert!(m.mul_vec(&f7, v).iter().all(|&x| x == 0));
            }
        }

        #[test]
        fn column_rank_agrees_with_rref((rows, cols) in arb_matrix(5)) {
            let f5 = f(5);
            let refs: Vec<&[u64]> = cols.iter().map(|c| c.as_slice()).collect();
            let m = Matrix::from_columns(rows, &refs);
            let mut scratch = RankScratch::default();
            let r = column_rank(&f5, rows, refs.iter().copied(), &mut scratch);
            prop_assert_eq!(r, m.rank(&f5));
        }
    }
}
