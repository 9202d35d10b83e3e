//! Dense matrices over an arbitrary ring of entries.

use std::ops::{Index, IndexMut};

use num::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat<T> {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<T>>,
}

impl<T> Mat<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix rows");
        Mat { nrows, ncols, rows }
    }

    pub fn from_fn(nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        Mat {
            nrows,
            ncols,
            rows: (0..nrows).map(|i| (0..ncols).map(|j| f(i, j)).collect()).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat::from_fn(self.nrows, self.ncols, |i, j| f(&self.rows[i][j]))
    }

    /// Submatrix keeping the given row and column indices, in order.
    pub fn submatrix(&self, keep_rows: &[usize], keep_cols: &[usize]) -> Mat<T>
    where
        T: Clone,
    {
        Mat::from_fn(keep_rows.len(), keep_cols.len(), |i, j| {
            self.rows[keep_rows[i]][keep_cols[j]].clone()
        })
    }

    pub fn transpose(&self) -> Mat<T>
    where
        T: Clone,
    {
        Mat::from_fn(self.ncols, self.nrows, |i, j| self.rows[j][i].clone())
    }
}

impl<T: Clone + Zero> Mat<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Mat::from_fn(nrows, ncols, |_, _| T::zero())
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|e| e.is_zero()))
    }
}

impl<T: Clone> Mat<T> {
    pub fn identity(n: usize, one: T, zero: T) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }
}

impl<T: PartialEq> Mat<T> {
    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.nrows).all(|i| (0..i).all(|j| self.rows[i][j] == self.rows[j][i]))
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.rows[i][j]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.rows[i][j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Rational};

    #[test]
    fn submatrix_and_symmetry() {
        let m: Mat<Rational> = Mat::from_fn(3, 3, |i, j| rat((i + j) as i64));
        assert!(m.is_symmetric());
        let s = m.submatrix(&[0, 2], &[0, 2]);
        assert_eq!(s[(1, 1)], rat(4));
        assert_eq!(s.nrows(), 2);
    }
}
