//! Truncated univariate power series.
//!
//! A `Series` holds the coefficients of `c_0 + c_1 u + ... + c_order u^order`;
//! all arithmetic discards terms above `order`. Binary operations require both
//! operands to share the same truncation order, which every caller in this
//! crate arranges explicitly.

use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Series<T> {
    order: usize,
    coeffs: Vec<T>,
}

impl<T: Scalar> Series<T> {
    /// Series with the given coefficients `c_0..=c_order`.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Series { order: coeffs.len() - 1, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series { order, coeffs: vec![T::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(T::one(), 0, order)
    }

    /// `c * u^deg`, truncated at `order`. Degrees above `order` give zero.
    pub fn monomial(c: T, deg: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if deg <= order {
            s.coeffs[deg] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `u^i`; zero above the truncation order.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &T) -> Self {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    #[allow(clippy::needless_range_loop)] // convolution against two buffers
    pub fn inverse(&self) -> Self {
        let c0 = self.coeffs[0].clone();
        assert!(!c0.is_zero(), "cannot invert a series with zero constant term");
        let mut inv = Vec::with_capacity(self.order + 1);
        inv.push(T::one() / c0.clone());
        for n in 1..=self.order {
            // c0 * b_n = -sum_{i<n} a_{n-i} b_i
            let mut acc = T::zero();
            for i in 0..n {
                acc = acc + self.coeffs[n - i].clone() * inv[i].clone();
            }
            inv.push(-acc / c0.clone());
        }
        Series { order: self.order, coeffs: inv }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl<T: Scalar> Add for &Series<T> {
    type Output = Series<T>;
    fn add(self, rhs: &Series<T>) -> Series<T> {
        assert_eq!(self.order, rhs.order, "series truncation orders differ");
        Series {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Series<T> {
    type Output = Series<T>;
    fn sub(self, rhs: &Series<T>) -> Series<T> {
        assert_eq!(self.order, rhs.order, "series truncation orders differ");
        Series {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Neg for &Series<T> {
    type Output = Series<T>;
    fn neg(self) -> Series<T> {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl<T: Scalar> Mul for &Series<T> {
    type Output = Series<T>;
    fn mul(self, rhs: &Series<T>) -> Series<T> {
        assert_eq!(self.order, rhs.order, "series truncation orders differ");
        let mut coeffs = vec![T::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > self.order {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series { order: self.order, coeffs }
    }
}

impl<T: fmt::Debug> fmt::Debug for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series{:?}", self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int, Rat, RatSeries};
    use proptest::prelude::*;

    fn s(coeffs: &[(i64, i64)]) -> RatSeries {
        Series::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn inverse_of_one_minus_u_is_geometric() {
        let a = s(&[(1, 1), (-1, 1), (0, 1), (0, 1)]);
        let inv = a.inverse();
        assert_eq!(inv, s(&[(1, 1), (1, 1), (1, 1), (1, 1)]));
        assert_eq!(&a * &inv, RatSeries::one(3));
    }

    #[test]
    fn monomial_above_order_truncates_to_zero() {
        let m = RatSeries::monomial(rat_int(3), 5, 2);
        assert!(m.is_zero());
    }

    #[test]
    fn works_over_f64() {
        let a = Series::from_coeffs(vec![1.0f64, 0.5]);
        let b = Series::from_coeffs(vec![2.0f64, 0.25]);
        assert_eq!((&a * &b).coeffs(), &[2.0, 1.25]);
    }

    fn arb_series(order: usize) -> impl Strategy<Value = RatSeries> {
        proptest::collection::vec((-6i64..=6, 1i64..=4), order + 1)
            .prop_map(|cs| Series::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(a in arb_series(6), b in arb_series(6), c in arb_series(6)) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn inverse_roundtrip(mut a in arb_series(6), c0 in 1i64..=5) {
            // force an invertible constant term
            let mut coeffs: Vec<Rat> = a.coeffs().to_vec();
            coeffs[0] = rat_int(c0);
            a = Series::from_coeffs(coeffs);
            prop_assert_eq!(&a * &a.inverse(), RatSeries::one(6));
        }
    }
}
