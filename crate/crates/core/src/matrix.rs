//! Dense square matrices over a [`Ring`].
//!
//! Entry `(row, col)` is the coefficient of basis vector `row` in the image
//! of basis vector `col`, so matrices act on column vectors and a product
//! `a * b` applies `b` first.

use std::ops::{Add, Mul, Sub};

use num_integer::Integer;
use num_traits::Signed;

use crate::laurent::{Laurent, LaurentPoly};
use crate::scalar::{Coefficient, Exponent, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<R> {
    size: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(size: usize) -> Self {
        Matrix { size, entries: vec![R::zero(); size * size] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.entries[i * size + i] = R::one();
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> R>(size: usize, mut f: F) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for row in 0..size {
            for col in 0..size {
                entries.push(f(row, col));
            }
        }
        Matrix { size, entries }
    }

    /// Builds a matrix from rows; `None` when the rows do not form a square.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Option<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return None;
        }
        Some(Matrix { size, entries: rows.into_iter().flatten().collect() })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &R {
        &self.entries[row * self.size + col]
    }

    pub fn get_mut(&mut self, row: usize, col: usize) -> &mut R {
        &mut self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: R) {
        self.entries[row * self.size + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.entries.chunks(self.size.max(1)).take(self.size)
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = &R> {
        (0..self.size).map(move |row| self.get(row, col))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.entries.iter().enumerate().map(move |(i, x)| (i / self.size, i % self.size, x))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn map<S: Ring, F: FnMut(&R) -> S>(&self, f: F) -> Matrix<S> {
        Matrix { size: self.size, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map<S: Ring, Err, F: FnMut(&R) -> Result<S, Err>>(&self, f: F) -> Result<Matrix<S>, Err> {
        Ok(Matrix { size: self.size, entries: self.entries.iter().map(f).collect::<Result<_, _>>()? })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.size, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.size, rhs.size, "matrix size mismatch");
        let n = self.size;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[k * n + j];
                    if !b.is_zero() {
                        out.entries[i * n + j].add_assign_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.size, v.len(), "vector length mismatch");
        let n = self.size;
        let mut out = vec![R::zero(); n];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.entries[i * n + k];
                if !a.is_zero() {
                    o.add_assign_mul(a, x);
                }
            }
        }
        out
    }

    fn zip_with<F: Fn(&R, &R) -> R>(&self, rhs: &Self, f: F) -> Self {
        assert_eq!(self.size, rhs.size, "matrix size mismatch");
        Matrix { size: self.size, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect() }
    }

    /// Product of a sequence of matrices; the identity when empty.
    pub fn product<'a, I: IntoIterator<Item = &'a Self>>(size: usize, factors: I) -> Self
    where
        R: 'a,
    {
        factors.into_iter().fold(Self::identity(size), |acc, m| acc.mul_ref(m))
    }
}

impl<R: Ring> Mul for &Matrix<R> {
    type Output = Matrix<R>;
    fn mul(self, rhs: &Matrix<R>) -> Matrix<R> {
        self.mul_ref(rhs)
    }
}

impl<R: Ring> Add for &Matrix<R> {
    type Output = Matrix<R>;
    fn add(self, rhs: &Matrix<R>) -> Matrix<R> {
        self.zip_with(rhs, R::add_ref)
    }
}

impl<R: Ring> Sub for &Matrix<R> {
    type Output = Matrix<R>;
    fn sub(self, rhs: &Matrix<R>) -> Matrix<R> {
        self.zip_with(rhs, R::sub_ref)
    }
}

impl<C: Coefficient + Integer + Signed, E: Exponent> Matrix<Laurent<C, E>> {
    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Rows are first multiplied by monomials so that every entry is an
    /// honest polynomial; the Bareiss quotients are then exact polynomial
    /// divisions. The monomial factors are divided out at the end.
    pub fn determinant(&self) -> Laurent<C, E> {
        let n = self.size;
        if n == 0 {
            return Laurent::one();
        }
        let mut m = self.clone();
        let mut correction = E::default();
        for row in 0..n {
            let mut low: Option<E> = None;
            for col in 0..n {
                for (e, _) in m.get(row, col).terms() {
                    low = Some(match low {
                        Some(l) => l.meet(*e),
                        None => *e,
                    });
                }
            }
            let Some(low) = low else { return Laurent::zero() };
            for col in 0..n {
                let shifted = m.get(row, col).shift(-low);
                m.set(row, col, shifted);
            }
            correction = correction + low;
        }

        let mut negate = false;
        let mut prev = Laurent::<C, E>::one();
        for k in 0..n {
            let Some(pivot) = (k..n).find(|&r| !m.get(r, k).is_zero()) else {
                return Laurent::zero();
            };
            if pivot != k {
                for col in 0..n {
                    m.entries.swap(pivot * n + col, k * n + col);
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(k, k).mul_ref(m.get(i, j)).sub_ref(&m.get(i, k).mul_ref(m.get(k, j)));
                    let q = num.exact_div(&prev).expect("Bareiss quotient must be exact");
                    m.set(i, j, q);
                }
                m.set(i, k, Laurent::zero());
            }
            prev = m.get(k, k).clone();
        }
        let det = m.get(n - 1, n - 1).shift(correction);
        if negate {
            det.neg_ref()
        } else {
            det
        }
    }
}

/// Convenience alias for matrices over `Z[r^±1, t^±1]`.
pub type PolyMatrix = Matrix<LaurentPoly>;
