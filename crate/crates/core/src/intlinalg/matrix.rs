use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<Rational>;

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    /// Builds from rows; `cols` is needed to give an empty row list a width.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Dimension(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let all: Vec<usize> = (0..self.cols).collect();
        self.select(rows, &all)
    }

    pub fn map<U: Clone + Zero>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Mul<&'a T, Output = T> + Add<&'a T, Output = T>,
{
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = &out.data[i * other.cols + j] + &(a * other.get(k, j));
                    out.data[i * other.cols + j] = v;
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.rows {
            return Err(Error::Dimension(format!("vector of length {} against {} rows", x.len(), self.rows)));
        }
        let mut out = vec![T::zero(); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = &*o + &(xi * self.get(i, j));
            }
        }
        Ok(out)
    }
}

impl IntMatrix {
    pub fn from_i64(rows: &[Vec<i64>], cols: usize) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), cols)
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| Rational::from_integer(x.clone()))
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|x| x.to_string())
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

pub fn is_permutation_matrix(m: &IntMatrix) -> bool {
    if !m.is_square() {
        return false;
    }
    let n = m.rows();
    let mut col_hits = vec![0usize; n];
    for i in 0..n {
        let mut ones = 0;
        for (j, x) in m.row(i).iter().enumerate() {
            if x.is_one() {
                ones += 1;
                col_hits[j] += 1;
            } else if !x.is_zero() {
                return false;
            }
        }
        if ones != 1 {
            return false;
        }
    }
    col_hits.iter().all(|&c| c == 1)
}

/// Reads a permutation matrix as `σ` with `M[i][σ(i)] = 1`.
pub fn permutation_of(m: &IntMatrix) -> Option<Vec<usize>> {
    if !is_permutation_matrix(m) {
        return None;
    }
    Some((0..m.rows()).map(|i| m.row(i).iter().position(One::is_one).unwrap()).collect())
}

pub fn permutation_matrix(sigma: &[usize]) -> IntMatrix {
    let n = sigma.len();
    IntMatrix::from_fn(n, n, |i, j| if sigma[i] == j { BigInt::one() } else { BigInt::zero() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_recognition() {
        assert!(is_permutation_matrix(&IntMatrix::identity(3)));
        assert!(is_permutation_matrix(&IntMatrix::from_i64(&[vec![0, 1], vec![1, 0]], 2).unwrap()));
        assert!(!is_permutation_matrix(&IntMatrix::from_i64(&[vec![1, 1], vec![0, 1]], 2).unwrap()));
        assert!(!is_permutation_matrix(&IntMatrix::from_i64(&[vec![1, 0], vec![1, 0]], 2).unwrap()));
        assert!(!is_permutation_matrix(&IntMatrix::from_i64(&[vec![-1]], 1).unwrap()));
        let sigma = vec![2, 0, 1];
        assert_eq!(permutation_of(&permutation_matrix(&sigma)), Some(sigma));
    }

    #[test]
    fn multiplication() {
        let a = IntMatrix::from_i64(&[vec![1, 2], vec![3, 4]], 2).unwrap();
        let b = IntMatrix::from_i64(&[vec![0, 1], vec![1, 0]], 2).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, IntMatrix::from_i64(&[vec![2, 1], vec![4, 3]], 2).unwrap());
        let x = a.left_mul_vec(&[BigInt::from(1), BigInt::from(-1)]).unwrap();
        assert_eq!(x, vec![BigInt::from(-2), BigInt::from(-2)]);
        assert!(a.mul(&IntMatrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(IntMatrix::from_i64(&[vec![1, 2], vec![3]], 2).is_err());
        assert_eq!(IntMatrix::from_i64(&[], 4).unwrap().cols(), 4);
    }
}
