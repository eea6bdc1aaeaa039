//! Scalar traits for the linear algebra.
//!
//! All elimination routines test pivots with `is_zero`, so they are exact
//! only over exact fields such as [`crate::Rational`].

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// A commutative ring with exact equality.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// A field: a [`Ring`] with division by nonzero elements.
pub trait Field: Ring + Div<Output = Self> {}

impl<T: Ring + Div<Output = T>> Field for T {}

/// Embeds a small integer into any ring.
pub fn from_int<R: Ring>(k: i64) -> R {
    let mut acc = R::zero();
    let one = R::one();
    for _ in 0..k.unsigned_abs() {
        acc = acc + one.clone();
    }
    if k < 0 {
        -acc
    } else {
        acc
    }
}
