use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::poly::Poly;

/// Entries of an integral domain that elimination can run over.
pub trait Entry: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_entry(&self) -> bool;
    fn add_entry(&self, other: &Self) -> Self;
    fn sub_entry(&self, other: &Self) -> Self;
    fn mul_entry(&self, other: &Self) -> Self;
    fn neg_entry(&self) -> Self;
    fn exact_div_entry(&self, den: &Self) -> Result<Self>;
    /// Pivot preference: smaller is better.
    fn cost(&self) -> usize;
}

impl Entry for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_entry(&self) -> bool {
        self.is_zero()
    }
    fn add_entry(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_entry(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_entry(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_entry(&self) -> Self {
        -self
    }
    fn exact_div_entry(&self, den: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(den);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision)
        }
    }
    fn cost(&self) -> usize {
        self.abs().bits() as usize
    }
}

impl Entry for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(self.ring())
    }
    fn one_like(&self) -> Self {
        Poly::one(self.ring())
    }
    fn is_zero_entry(&self) -> bool {
        self.is_zero()
    }
    fn add_entry(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_entry(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_entry(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_entry(&self) -> Self {
        -self
    }
    fn exact_div_entry(&self, den: &Self) -> Result<Self> {
        self.exact_divide(den)
    }
    fn cost(&self) -> usize {
        let deg = self.degree().unwrap_or(0) as usize;
        let big = self.terms().map(|(_, c)| 128 - c.unsigned_abs().leading_zeros() as usize).max();
        deg * 64 + self.len() * 8 + big.unwrap_or(0)
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type PolyMatrix = Matrix<Poly>;

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Matrix<T> {
        Matrix { rows, cols, data: alloc::vec![value; rows * cols] }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Matrix<T> {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    /// Panics on ragged input. An empty row list gives a 0×0 matrix.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Matrix<T> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
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

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
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

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix<T> {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U, F: FnMut(&T) -> Result<U>>(&self, f: F) -> Result<Matrix<U>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<U>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    /// Columns of `other` appended on the right.
    pub fn hstack(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.rows, other.rows, "hstack row count");
        let mut data = Vec::with_capacity(self.rows * (self.cols + other.cols));
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix { rows: self.rows, cols: self.cols + other.cols, data }
    }

    pub fn submatrix(&self, rows: core::ops::Range<usize>, cols: core::ops::Range<usize>) -> Matrix<T> {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for i in rows.clone() {
            data.extend_from_slice(&self.row(i)[cols.clone()]);
        }
        Matrix { rows: rows.len(), cols: cols.len(), data }
    }
}

impl<T: Entry> Matrix<T> {
    /// Product; `zero` seeds entries when the inner dimension is 0.
    pub fn mul_with(&self, other: &Matrix<T>, zero: &T) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = zero.clone();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero_entry() {
                        continue;
                    }
                    let b = other.get(k, j);
                    if b.is_zero_entry() {
                        continue;
                    }
                    acc = acc.add_entry(&a.mul_entry(b));
                }
                data.push(acc);
            }
        }
        Matrix { rows: self.rows, cols: other.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Entry::is_zero_entry)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        Matrix::filled(rows, cols, BigInt::zero())
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_i64(rows: Vec<Vec<i64>>) -> IntMatrix {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        self.mul_with(other, &BigInt::zero())
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{} ", self.rows, self.cols)?;
        f.debug_list().entries(self.data.chunks(self.cols.max(1))).finish()
    }
}
