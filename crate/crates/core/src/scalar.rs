//! Scalar traits shared by the polynomial and matrix layers.
//!
//! Coefficients only need to be a commutative ring in the `num-traits`
//! sense. Matrix entries go through [`Ring`], which adds by-reference
//! operations so that big-integer polynomials are not cloned on every
//! multiply-accumulate.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

/// Coefficient ring of a sparse Laurent polynomial.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Num + Neg<Output = Self> {}

impl<T> Coefficient for T where T: Clone + PartialEq + fmt::Debug + Num + Neg<Output = T> {}

/// Exponent group of a Laurent polynomial: a totally ordered abelian group
/// that is also a lattice under the componentwise order.
pub trait Exponent:
    Copy + Ord + Hash + fmt::Debug + Default + Add<Output = Self> + Sub<Output = Self> + Neg<Output = Self>
{
    /// Componentwise minimum.
    fn meet(self, other: Self) -> Self;
}

impl Exponent for i32 {
    fn meet(self, other: Self) -> Self {
        self.min(other)
    }
}

impl Exponent for i64 {
    fn meet(self, other: Self) -> Self {
        self.min(other)
    }
}

/// Commutative ring used as the entry type of [`crate::Matrix`].
pub trait Ring: Clone + PartialEq + fmt::Debug + Zero + One {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }

    /// `self += a * b`
    fn add_assign_mul(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        self.add_assign_ref(&p);
    }
}

macro_rules! num_ring {
    ($($t:ty),*) => {$(
        impl Ring for $t {
            fn add_ref(&self, rhs: &Self) -> Self { self + rhs }
            fn sub_ref(&self, rhs: &Self) -> Self { self - rhs }
            fn mul_ref(&self, rhs: &Self) -> Self { self * rhs }
            fn neg_ref(&self) -> Self { -self }
        }
    )*};
}

num_ring!(i64, f32, f64, BigInt, BigRational);
