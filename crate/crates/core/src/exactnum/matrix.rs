//! Dense square matrices over an exact scalar ring.

use std::fmt::Debug;

use num_traits::{One, Zero};

use super::{Cyclotomic, CyclotomicPoly, Rational};

/// The operations matrix models need from their entries.
pub trait Scalar: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl Scalar for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// Row-major square matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            entries: vec![T::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Matrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn trace(&self) -> T {
        (0..self.dim).fold(T::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Product `self · rhs`; zero entries are skipped, so monomial and
    /// companion matrices multiply in near-linear time.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.entries[i * n + j];
                    *slot = slot.add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Self::identity(self.dim);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

/// Matrix of multiplication by `X` on `Q[X]/(f)` in the basis `1, X, …, X^{d-1}`:
/// ones on the subdiagonal and `-f_0, …, -f_{d-1}` in the last column.
pub fn companion_matrix(f: &CyclotomicPoly) -> Matrix<Rational> {
    let d = f.degree();
    let mut m = Matrix::zeros(d);
    for j in 0..d {
        if j + 1 < d {
            m.set(j + 1, j, <Rational as One>::one());
        }
        m.set(j, d - 1, Rational::from_integer(-f.coeff(j).clone()));
    }
    m
}
