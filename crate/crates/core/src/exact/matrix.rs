use num_traits::{One, Zero};
use std::fmt;

use super::rational::{format_rational, parse_rational, Rational};
use super::AlgebraError;

/// Commutative semiring operations needed for matrix products.
pub trait Semiring: Clone + PartialEq {
    fn nil() -> Self;
    fn unit() -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn is_nil(&self) -> bool {
        *self == Self::nil()
    }
}

impl Semiring for Rational {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Semiring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::nil(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::unit();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix { rows, cols, data }
    }

    /// Builds from a flat row-major list.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, AlgebraError> {
        if data.len() != rows * cols {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, o: &Self) -> Result<Self, AlgebraError> {
        if self.cols != o.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_nil() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_nil() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    out.data[idx] = out.data[idx].plus(&a.times(b));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, o: &Self) -> Result<Self, AlgebraError> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(AlgebraError::DimensionMismatch("sum of unequal shapes".into()));
        }
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.plus(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, AlgebraError> {
        if v.len() != self.cols {
            return Err(AlgebraError::DimensionMismatch("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::nil(), |acc, (a, b)| acc.plus(&a.times(b)))
            })
            .collect())
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[T]) -> Result<Vec<T>, AlgebraError> {
        self.transpose().mul_vec(v)
    }

    pub fn pow(&self, k: usize) -> Result<Self, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::DimensionMismatch("power of non-square".into()));
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::nil(), |acc, i| acc.plus(self.get(i, i)))
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &Self) -> Self {
        let (r, c) = (self.rows + o.rows, self.cols + o.cols);
        Self::from_fn(r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                o.get(i - self.rows, j - self.cols).clone()
            } else {
                T::nil()
            }
        })
    }
}

/// Reduced row echelon form with the pivot columns recorded.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    pub matrix: Matrix<Rational>,
    pub pivots: Vec<usize>,
}

impl Matrix<Rational> {
    /// Rows of rational strings such as `"1/2"`.
    pub fn parse_rows(rows: &[Vec<String>]) -> Result<Self, AlgebraError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Matrix::from_rows(rows)
    }

    pub fn format_rows(&self) -> Vec<Vec<String>> {
        self.to_rows().iter().map(|r| r.iter().map(format_rational).collect()).collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.add(&o.scale(&-Rational::one()))
    }

    /// Gauss-Jordan elimination, first nonzero entry as pivot.
    pub fn rref(&self) -> RowEchelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !Zero::is_zero(m.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = Rational::one() / m.get(r, c);
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if Zero::is_zero(&f) {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        RowEchelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Rank together with a basis of the right kernel.
    pub fn rank_nullspace(&self) -> (usize, Vec<Vec<Rational>>) {
        let RowEchelon { matrix, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -matrix.get(r, f).clone();
                }
                v
            })
            .collect();
        (pivots.len(), basis)
    }

    /// Some solution of `self * x = b` (free variables set to zero).
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
        if b.len() != self.rows {
            return Err(AlgebraError::DimensionMismatch("right-hand side length".into()));
        }
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let RowEchelon { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(AlgebraError::Inconsistent);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = matrix.get(r, self.cols).clone();
        }
        Ok(x)
    }

    /// Unique solution of a square nonsingular system.
    pub fn solve_unique(&self, b: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::DimensionMismatch("square system expected".into()));
        }
        if self.rank() < self.rows {
            return Err(AlgebraError::Singular);
        }
        self.solve(b)
    }

    pub fn det(&self) -> Result<Rational, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::DimensionMismatch("determinant of non-square".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !Zero::is_zero(m.get(i, c))) else {
                return Ok(Rational::zero());
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det *= &piv;
            for i in c + 1..n {
                let f = m.get(i, c) / &piv;
                if Zero::is_zero(&f) {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j) - &f * m.get(c, j);
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::DimensionMismatch("inverse of non-square".into()));
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let RowEchelon { matrix, pivots } = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return Err(AlgebraError::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| matrix.get(i, n + j).clone()))
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for Matrix<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = self.row(i).iter().map(format_rational).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
