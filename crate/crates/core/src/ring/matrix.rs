use std::ops::{Index, IndexMut};

use super::{Field, RingError};

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, RingError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(RingError::DimensionMismatch(format!("ragged rows in {r}-row matrix")));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn diagonal(entries: Vec<F>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.into_iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    /// `[[tl, tr], [bl, br]]` from four equally sized square blocks.
    pub fn from_blocks(tl: &Matrix<F>, tr: &Matrix<F>, bl: &Matrix<F>, br: &Matrix<F>) -> Result<Self, RingError> {
        let n = tl.rows;
        if [tl, tr, bl, br].iter().any(|b| b.rows != n || b.cols != n) {
            return Err(RingError::DimensionMismatch("blocks must be square and equal-sized".into()));
        }
        Ok(Matrix::from_fn(2 * n, 2 * n, |i, j| {
            let b = match (i < n, j < n) {
                (true, true) => tl,
                (true, false) => tr,
                (false, true) => bl,
                (false, false) => br,
            };
            b[(i % n, j % n)].clone()
        }))
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a.clone() * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn mul(&self, other: &Matrix<F>) -> Result<Matrix<F>, RingError> {
        if self.cols != other.rows {
            return Err(RingError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a.clone() * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix<F>) -> Result<Matrix<F>, RingError> {
        self.zip(other, |a, b| a.clone() + b)
    }

    pub fn sub(&self, other: &Matrix<F>) -> Result<Matrix<F>, RingError> {
        self.zip(other, |a, b| a.clone() - b)
    }

    fn zip(&self, other: &Matrix<F>, f: impl Fn(&F, &F) -> F) -> Result<Matrix<F>, RingError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(RingError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale(&self, s: &F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * s).collect() }
    }

    pub fn pow(&self, e: u32) -> Result<Matrix<F>, RingError> {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Kronecker product; `self` indexes the most significant block.
    pub fn kron(&self, other: &Matrix<F>) -> Matrix<F> {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        Matrix::from_fn(r, c, |i, j| {
            let a = &self[(i / other.rows, j / other.cols)];
            if a.is_zero() {
                F::zero()
            } else {
                a.clone() * &other[(i % other.rows, j % other.cols)]
            }
        })
    }

    pub fn trace(&self) -> F {
        let mut acc = F::zero();
        for i in 0..self.rows.min(self.cols) {
            acc += &self[(i, i)];
        }
        acc
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Determinant with the strategy suited to the field: fraction-free
    /// Bareiss elimination for symbolic entries, Gaussian elimination for
    /// rational numbers.
    pub fn determinant(&self) -> Result<F, RingError> {
        if !self.is_square() {
            return Err(RingError::DimensionMismatch(format!("determinant of {}x{}", self.rows, self.cols)));
        }
        Ok(F::determinant(self))
    }

    /// Gaussian elimination with division.
    pub fn det_gauss(&self) -> F {
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[(i, k)].is_zero()) else {
                return F::zero();
            };
            if p != k {
                m.swap_rows(p, k);
                det = -det;
            }
            let pivot = m[(k, k)].clone();
            det *= &pivot;
            let inv = pivot.try_inv().expect("nonzero pivot");
            for i in k + 1..n {
                if m[(i, k)].is_zero() {
                    continue;
                }
                let factor = m[(i, k)].clone() * &inv;
                for j in k + 1..n {
                    let delta = factor.clone() * &m[(k, j)];
                    m[(i, j)] -= &delta;
                }
                m[(i, k)] = F::zero();
            }
        }
        det
    }

    /// Fraction-free Bareiss elimination; every division by the previous
    /// pivot is exact.
    pub fn det_bareiss(&self) -> F {
        let n = self.rows;
        if n == 0 {
            return F::one();
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = F::one();
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&i| !m[(i, k)].is_zero()) else {
                return F::zero();
            };
            if p != k {
                m.swap_rows(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = m[(i, j)].clone() * &m[(k, k)] - m[(i, k)].clone() * &m[(k, j)];
                    m[(i, j)] = v.try_div(&prev).expect("Bareiss pivots are nonzero");
                }
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        if negate {
            -d
        } else {
            d
        }
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{RatFunc, Var};
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn empty_determinant_is_one() {
        assert_eq!(Matrix::<BigRational>::zeros(0, 0).determinant().unwrap(), q(1));
        assert_eq!(Matrix::<RatFunc>::zeros(0, 0).determinant().unwrap(), RatFunc::one());
    }

    #[test]
    fn two_by_two_symbolic() {
        let (a, b, c, d) = (RatFunc::var(Var::A), RatFunc::var(Var::B), RatFunc::var(Var::C), RatFunc::var(Var::D));
        let m = Matrix::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]).unwrap();
        assert_eq!(m.determinant().unwrap(), a * d - b * c);
    }

    #[test]
    fn repeated_rows_vanish() {
        let m = Matrix::from_rows(vec![vec![q(1), q(2), q(3)], vec![q(4), q(5), q(6)], vec![q(1), q(2), q(3)]]).unwrap();
        assert_eq!(m.determinant().unwrap(), q(0));
        let s = m.map(|x| RatFunc::constant(x.clone()));
        assert!(s.determinant().unwrap().is_zero());
    }

    #[test]
    fn pivoting_on_zero_leading_entry() {
        let m = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap();
        assert_eq!(m.det_gauss(), q(-1));
        let s = m.map(|x| RatFunc::constant(x.clone()));
        assert_eq!(s.det_bareiss(), RatFunc::from_int(-1));
    }

    #[test]
    fn non_square_is_an_error() {
        assert!(Matrix::<BigRational>::zeros(2, 3).determinant().is_err());
    }
}
