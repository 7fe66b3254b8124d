//! Small dense matrices over an exact field.

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<C> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Field> Matrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![C::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, C::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &C {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: C) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<C>) -> Result<Matrix<C>> {
        if self.cols != other.rows {
            return Err(Error::AmbientMismatch(self.cols, other.rows));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c).plus(&a.times(b));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).inverse().expect("pivot is nonzero");
            for c in col..self.cols {
                let v = self.get(row, c).times(&inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let v = self.get(r, c).minus(&factor.times(self.get(row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// The unique solution of `self · x = rhs`; errors when the system is
    /// inconsistent or underdetermined.
    pub fn solve(&self, rhs: &[C]) -> Result<Vec<C>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for (r, b) in rhs.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b.clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) || pivots.len() < self.cols {
            return Err(Error::Singular);
        }
        Ok((0..self.cols).map(|r| aug.get(r, self.cols).clone()).collect())
    }

    pub fn inverse(&self) -> Result<Matrix<C>> {
        if self.rows != self.cols {
            return Err(Error::AmbientMismatch(self.rows, self.cols));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, C::one());
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Ok(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn m(rows: usize, cols: usize, vals: &[i64]) -> Matrix<Rational> {
        let mut out = Matrix::zeros(rows, cols);
        for (i, v) in vals.iter().enumerate() {
            out.set(i / cols, i % cols, Rational::from_i64(*v));
        }
        out
    }

    #[test]
    fn solve_and_invert() {
        let a = m(2, 2, &[2, 1, 1, 3]);
        let x = a.solve(&[Rational::from_i64(3), Rational::from_i64(4)]).unwrap();
        assert_eq!(x, vec![Rational::from_i64(1), Rational::from_i64(1)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(m(2, 2, &[1, 2, 2, 4]).inverse(), Err(Error::Singular));
        assert_eq!(m(2, 2, &[1, 2, 2, 4]).rank(), 1);
        let over = m(3, 2, &[1, 0, 0, 1, 1, 1]);
        let x = over
            .solve(&[
                Rational::from_i64(1),
                Rational::from_i64(2),
                Rational::from_i64(3),
            ])
            .unwrap();
        assert_eq!(x, vec![Rational::from_i64(1), Rational::from_i64(2)]);
        assert!(over
            .solve(&[
                Rational::from_i64(1),
                Rational::from_i64(2),
                Rational::from_i64(4)
            ])
            .is_err());
    }
}
