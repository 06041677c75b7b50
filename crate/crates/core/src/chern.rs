//! Characteristic-class series evaluated at explicit numeric Chern roots.
//!
//! A bundle enters these functions as the plain list of its root weights, so
//! Chern classes become elementary symmetric polynomials, the Chern character
//! becomes a sum of exponentials and the Todd class a product of the usual
//! `x/(1-e^{-x})` factors, all as truncated series in one formal variable.

use crate::error::Error;
use crate::scalar::{factorial, from_usize, Scalar};
use crate::series::Series;
use itertools::Itertools;

/// k-th elementary symmetric polynomial of the weights.
///
/// `e_0 = 1`, and `e_k = 0` once `k` exceeds the number of weights.
pub fn elem_sym<T: Scalar>(k: usize, ws: &[T]) -> T {
    if k > ws.len() {
        return T::zero();
    }
    // dp over prefixes: e[j] after processing w is e[j] + w * e[j-1]
    let mut e = vec![T::zero(); k + 1];
    e[0] = T::one();
    for w in ws {
        for j in (1..=k).rev() {
            e[j] = e[j].clone() + w.clone() * e[j - 1].clone();
        }
    }
    e.pop().unwrap()
}

/// `exp(w u)` truncated at `order`.
pub fn exp_series<T: Scalar>(w: &T, order: usize) -> Series<T> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = T::one();
    coeffs.push(term.clone());
    for j in 1..=order {
        term = term * w.clone() / from_usize::<T>(j);
        coeffs.push(term.clone());
    }
    Series::from_coeffs(coeffs)
}

/// Chern character of a bundle with the given root weights:
/// `sum_i exp(w_i u)` truncated at `order`.
pub fn ch_from_weights<T: Scalar>(ws: &[T], order: usize) -> Series<T> {
    let mut acc = Series::zero(order);
    for w in ws {
        acc = &acc + &exp_series(w, order);
    }
    acc
}

/// Todd class of a bundle with the given root weights:
/// `prod_i (w_i u) / (1 - exp(-w_i u))` truncated at `order`.
///
/// A zero weight contributes the factor 1.
pub fn td_from_weights<T: Scalar>(ws: &[T], order: usize) -> Series<T> {
    let mut acc = Series::one(order);
    for w in ws {
        // (1 - e^{-x})/x = sum_j (-1)^j x^j / (j+1)!  evaluated at x = w u,
        // which has constant term 1 for every w, so the inverse exists.
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut pw = T::one();
        for j in 0..=order {
            let c = pw.clone() / factorial::<T>(j + 1);
            coeffs.push(if j % 2 == 0 { c } else { -c });
            pw = pw * w.clone();
        }
        acc = &acc * &Series::from_coeffs(coeffs).inverse();
    }
    acc
}

/// Residual of the alternating-exterior-power Chern character identity
///
/// `sum_p (-1)^p ch(wedge^p B^*)  -  c_top(B) td(B)^{-1}`
///
/// for a bundle `B` with the given nonzero root weights. The left side sums
/// Chern characters over all p-fold sums of negated weights; the right side
/// is the top Chern class `(prod w_i) u^b` divided by the Todd series. The
/// result is the zero series whenever the identity holds up to `order`.
pub fn koszul_identity_residual<T: Scalar>(ws: &[T], order: usize) -> Result<Series<T>, Error> {
    if ws.iter().any(|w| w.is_zero()) {
        return Err(Error::invalid(
            "zero Chern root: td(B) inverse path divides by the root",
        ));
    }
    let b = ws.len();
    if order < b {
        return Err(Error::invalid(format!(
            "truncation order {order} below bundle rank {b}"
        )));
    }

    let mut lhs = Series::zero(order);
    for p in 0..=b {
        let roots: Vec<T> = (0..b)
            .combinations(p)
            .map(|ix| {
                let mut s = T::zero();
                for i in ix {
                    s = s - ws[i].clone();
                }
                s
            })
            .collect();
        let chp = ch_from_weights(&roots, order);
        lhs = if p % 2 == 0 { &lhs + &chp } else { &lhs - &chp };
    }

    let mut top = T::one();
    for w in ws {
        top = top * w.clone();
    }
    let c_top = Series::monomial(top, b, order);
    let rhs = &c_top * &td_from_weights(ws, order).inverse();

    Ok(&lhs - &rhs)
}
