//! Scalar traits the matrix and complex types are generic over.
//!
//! `Scalar` is the commutative-ring interface shared by exact rationals,
//! big integers and floating point. `FieldScalar` adds exact division and is
//! what Gaussian elimination requires; it is implemented only for genuine
//! fields (`BigRational`, `f64`, `f32`), never for integer types whose `Div`
//! truncates. `IntegerScalar` is the Euclidean interface Smith normal form
//! runs on.

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, Zero};

pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + FromPrimitive
    + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("i64 embeds into every scalar")
    }
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Display
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + AddAssign
        + SubAssign
        + MulAssign
        + FromPrimitive
        + 'static
{
}

/// Scalars with exact division by nonzero elements.
pub trait FieldScalar: Scalar + Div<Output = Self> {}

impl FieldScalar for BigRational {}
impl FieldScalar for f64 {}
impl FieldScalar for f32 {}

/// Euclidean scalars: what row/column reduction to Smith normal form needs.
pub trait IntegerScalar: Scalar + num_integer::Integer + Signed {}

impl IntegerScalar for BigInt {}
impl IntegerScalar for i64 {}
impl IntegerScalar for i32 {}

/// Shorthand for building a `BigRational` from an integer pair.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
