//! Dense exact-rational matrices: just enough linear algebra for the
//! vector representation, the Gel'fand T-matrix minors and the rank
//! bound of the invariant count.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::omega::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += p;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] += &other[(i, j)];
            }
        }
        out
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] -= &other[(i, j)];
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Exact determinant by Gaussian elimination.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[(r, col)].is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => return Rational::zero(),
            };
            if pivot != col {
                m.swap_rows(pivot, col);
                det = -det;
            }
            let p = m[(col, col)].clone();
            det *= &p;
            for r in (col + 1)..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] / &p;
                for c in col..n {
                    let sub = &factor * &m[(col, c)];
                    m[(r, c)] -= sub;
                }
            }
        }
        det
    }

    /// Exact rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let pivot = (row..m.rows).find(|&r| !m[(r, col)].is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            m.swap_rows(pivot, row);
            let p = m[(row, col)].clone();
            for r in (row + 1)..m.rows {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] / &p;
                for c in col..m.cols {
                    let sub = &factor * &m[(row, c)];
                    m[(r, c)] -= sub;
                }
            }
            rank += 1;
            row += 1;
        }
        rank
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(r1 * self.cols + c, r2 * self.cols + c);
        }
    }

    /// Submatrix with the given rows and columns removed.
    pub fn delete_rows_cols(&self, rows: &[usize], cols: &[usize]) -> RatMatrix {
        let keep_r: Vec<usize> = (0..self.rows).filter(|r| !rows.contains(r)).collect();
        let keep_c: Vec<usize> = (0..self.cols).filter(|c| !cols.contains(c)).collect();
        let mut out = RatMatrix::zeros(keep_r.len(), keep_c.len());
        for (i, &r) in keep_r.iter().enumerate() {
            for (j, &c) in keep_c.iter().enumerate() {
                out[(i, j)] = self[(r, c)].clone();
            }
        }
        out
    }
}

impl core::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl core::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::rat;

    #[test]
    fn det_and_rank() {
        let mut m = RatMatrix::zeros(3, 3);
        m[(0, 0)] = rat(2, 1);
        m[(0, 1)] = rat(1, 1);
        m[(1, 1)] = rat(3, 1);
        m[(1, 2)] = rat(1, 2);
        m[(2, 2)] = rat(-1, 1);
        assert_eq!(m.det(), rat(-6, 1));
        assert_eq!(m.rank(), 3);

        let mut s = RatMatrix::zeros(2, 3);
        s[(0, 0)] = rat(1, 1);
        s[(0, 1)] = rat(2, 1);
        s[(1, 0)] = rat(2, 1);
        s[(1, 1)] = rat(4, 1);
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn antisymmetric_odd_det_zero() {
        let mut m = RatMatrix::zeros(3, 3);
        m[(0, 1)] = rat(5, 7);
        m[(1, 0)] = rat(-5, 7);
        m[(0, 2)] = rat(-2, 3);
        m[(2, 0)] = rat(2, 3);
        m[(1, 2)] = rat(9, 1);
        m[(2, 1)] = rat(-9, 1);
        assert_eq!(m.det(), rat(0, 1));
    }
}
