//! Scalar abstraction for the arithmetic core.
//!
//! Series arithmetic, symmetric functions, interpolation and the dense
//! linear algebra are field computations that never look inside their
//! coefficients. They are written against [`Scalar`] so they work for
//! `f64` as well as for the exact rationals the rest of the crate uses.

use num_traits::{FromPrimitive, Num};
use std::ops::Neg;

/// A field-like scalar: exact rationals in production, floats if you only
/// need approximate values.
pub trait Scalar: Num + Clone + Neg<Output = Self> + FromPrimitive {}

impl<T: Num + Clone + Neg<Output = T> + FromPrimitive> Scalar for T {}

/// Converts a small unsigned integer into the scalar type.
pub fn from_usize<T: Scalar>(n: usize) -> T {
    T::from_usize(n).expect("integer does not fit in scalar type")
}

/// `n!` in the scalar type.
pub fn factorial<T: Scalar>(n: usize) -> T {
    let mut acc = T::one();
    for i in 2..=n {
        acc = acc * from_usize::<T>(i);
    }
    acc
}
