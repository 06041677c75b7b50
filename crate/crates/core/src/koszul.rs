//! Independent brute-force oracle on projective space.
//!
//! For a complete intersection of hypersurfaces of degrees `r_1, ..., r_s`
//! in `P^n`, the alternating sum over exterior powers of the dual of the
//! defining bundle computes `h^0(X, O(m))` and the total action weight
//! `w(X, O(m))` directly from monomial counts, with no localization anywhere
//! in the path. Exact integer samples over consecutive `m` are interpolated
//! to recover the expansion coefficients; agreement with the closed-form
//! evaluators is the crate's main cross-check.
//!
//! Sign convention: a one-parameter subgroup with coordinate weights
//! `lambda_i` acts on the monomial section `z^a` with weight
//! `-sum_i a_i lambda_i`, and supplied section weights must follow the same
//! convention.

use crate::error::Error;
use crate::futaki::{futaki_from_expansions, ExpansionCoeffs};
use crate::linalg::{eval_poly, interpolate};
use crate::{Rat, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Visits every exponent vector of total degree `d` in `vars` variables.
fn for_each_monomial(vars: usize, d: i64, mut f: impl FnMut(&[i64])) {
    fn rec(buf: &mut Vec<i64>, vars: usize, rest: i64, f: &mut impl FnMut(&[i64])) {
        if buf.len() + 1 == vars {
            buf.push(rest);
            f(buf);
            buf.pop();
            return;
        }
        for a in 0..=rest {
            buf.push(a);
            rec(buf, vars, rest - a, f);
            buf.pop();
        }
    }
    if d < 0 || vars == 0 {
        return;
    }
    rec(&mut Vec::with_capacity(vars), vars, d, &mut f);
}

/// The space of degree-`m` monomials in `n + 1` variables whose i-th
/// coordinate carries weight `lambda_i`. Empty for negative degree.
#[derive(Debug, Clone)]
pub struct WeightedMonomialSpace<'a> {
    n: usize,
    degree: i64,
    lambda: &'a [i64],
}

impl<'a> WeightedMonomialSpace<'a> {
    pub fn new(n: usize, degree: i64, lambda: &'a [i64]) -> Self {
        WeightedMonomialSpace { n, degree, lambda }
    }

    /// `C(n + m, n)`; zero for negative degree.
    pub fn dim(&self) -> BigInt {
        if self.degree < 0 {
            return BigInt::zero();
        }
        let mut acc = BigInt::one();
        for i in 1..=self.n {
            acc = acc * BigInt::from(self.degree + i as i64) / BigInt::from(i as u64);
        }
        acc
    }

    /// Total action weight `sum_{|a| = m} -sum_i a_i lambda_i`, by direct
    /// enumeration of the monomials.
    pub fn total_weight(&self) -> BigInt {
        let mut total = BigInt::zero();
        for_each_monomial(self.n + 1, self.degree, |a| {
            let w: i64 = a.iter().zip(self.lambda).map(|(&ai, &li)| ai * li).sum();
            total -= BigInt::from(w);
        });
        total
    }
}

fn monomial_count(n: usize, d: i64) -> BigInt {
    WeightedMonomialSpace::new(n, d, &[]).dim()
}

fn subsets_with_sums<'a>(rs: &'a [i64], alphas: &'a [i64]) -> Vec<(usize, i64, i64)> {
    // (|J|, r_J, alpha_J) over all subsets J
    let s = rs.len();
    (0..1usize << s)
        .map(|mask| {
            let mut size = 0usize;
            let (mut r, mut a) = (0i64, 0i64);
            for (j, &rj) in rs.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    size += 1;
                    r += rj;
                    a += alphas.get(j).copied().unwrap_or(0);
                }
            }
            (size, r, a)
        })
        .collect()
}

/// `h^0(X, O(m))` of the intersection of hypersurfaces of degrees `rs`:
/// the alternating binomial sum `sum_J (-1)^{|J|} C(n + m - r_J, n)`.
pub fn h0_ci(n: usize, rs: &[i64], m: i64) -> Result<BigInt> {
    if m < 0 {
        return Err(Error::invalid("twist must be nonnegative"));
    }
    if rs.iter().any(|&r| r < 1) {
        return Err(Error::invalid("hypersurface degrees must be >= 1"));
    }
    let mut total = BigInt::zero();
    for (size, r_j, _) in subsets_with_sums(rs, &[]) {
        let term = monomial_count(n, m - r_j);
        if size % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Total action weight `w(X, O(m))` of the intersection:
///
/// `sum_J (-1)^{|J|} [ w_amb(m - r_J) + alpha_J h0_amb(m - r_J) ]`
///
/// where `w_amb` and `h0_amb` are the ambient weight and dimension of the
/// twisted monomial space. Requires trace-zero `lambda`.
pub fn w_ci(n: usize, lambda: &[i64], alphas: &[i64], rs: &[i64], m: i64) -> Result<BigInt> {
    if lambda.len() != n + 1 {
        return Err(Error::invalid("one coordinate weight per variable"));
    }
    if lambda.iter().sum::<i64>() != 0 {
        return Err(Error::invalid("coordinate weights must sum to zero"));
    }
    if alphas.len() != rs.len() {
        return Err(Error::invalid("one section weight per degree"));
    }
    let mut total = BigInt::zero();
    for (size, r_j, alpha_j) in subsets_with_sums(rs, alphas) {
        let space = WeightedMonomialSpace::new(n, m - r_j, lambda);
        let term = space.total_weight() + BigInt::from(alpha_j) * space.dim();
        if size % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Exact interpolation of consecutive `(m, h0, w)` samples: `h0` must lie on
/// a polynomial of degree `dim_x` and `w` on one of degree `dim_x + 1`.
/// Returns the top two coefficients of each.
pub fn extract_expansion(samples: &[(i64, BigInt, BigInt)], dim_x: usize) -> Result<ExpansionCoeffs> {
    if samples.len() < dim_x + 2 {
        return Err(Error::invalid(format!(
            "need at least {} samples for dimension {dim_x}",
            dim_x + 2
        )));
    }
    if !samples.windows(2).all(|w| w[1].0 == w[0].0 + 1) {
        return Err(Error::invalid("sample twists must be consecutive"));
    }

    let fit = |values: Vec<Rat>, degree: usize, what: &str| -> Result<Vec<Rat>> {
        let xs: Vec<Rat> = samples
            .iter()
            .map(|(m, _, _)| Rat::from_integer((*m).into()))
            .collect();
        let coeffs = interpolate(&xs[..=degree], &values[..=degree]);
        for (x, y) in xs.iter().zip(&values).skip(degree + 1) {
            if eval_poly(&coeffs, x) != *y {
                return Err(Error::NotPolynomial(format!(
                    "{what} samples do not lie on a degree-{degree} polynomial at m = {x}"
                )));
            }
        }
        Ok(coeffs)
    };

    let h_coeffs = fit(
        samples.iter().map(|(_, h, _)| Rat::from_integer(h.clone())).collect(),
        dim_x,
        "dimension",
    )?;
    let w_coeffs = fit(
        samples.iter().map(|(_, _, w)| Rat::from_integer(w.clone())).collect(),
        dim_x + 1,
        "weight",
    )?;

    let coeff = |cs: &[Rat], i: i64| -> Rat {
        if i < 0 {
            Rat::zero()
        } else {
            cs.get(i as usize).cloned().unwrap_or_else(Rat::zero)
        }
    };
    Ok(ExpansionCoeffs {
        a0: coeff(&w_coeffs, dim_x as i64 + 1),
        a1: coeff(&w_coeffs, dim_x as i64),
        d0: coeff(&h_coeffs, dim_x as i64),
        d1: coeff(&h_coeffs, dim_x as i64 - 1),
    })
}

/// Expansion coefficients of the intersection from oracle samples. `scale`
/// replaces the polarization by its `scale`-th power (the grading doubles for
/// `scale = 2`), which must leave the resulting invariant unchanged.
pub fn oracle_expansion(
    n: usize,
    lambda: &[i64],
    rs: &[i64],
    alphas: &[i64],
    scale: i64,
) -> Result<ExpansionCoeffs> {
    if scale < 1 {
        return Err(Error::invalid("polarization power must be >= 1"));
    }
    if rs.len() > n {
        return Err(Error::invalid("more hypersurfaces than the dimension allows"));
    }
    let dim_x = n - rs.len();
    let r_total: i64 = rs.iter().sum();
    // all sample twists inside the polynomial range of every binomial term
    let start = r_total + 1;
    let count = dim_x + 4;
    let samples: Result<Vec<(i64, BigInt, BigInt)>> = (0..count as i64)
        .map(|i| {
            let m = start + i;
            Ok((m, h0_ci(n, rs, scale * m)?, w_ci(n, lambda, alphas, rs, scale * m)?))
        })
        .collect();
    extract_expansion(&samples?, dim_x)
}

/// Futaki invariant computed from first principles: oracle samples,
/// interpolation, then the defining formula.
pub fn oracle_futaki(n: usize, lambda: &[i64], rs: &[i64], alphas: &[i64]) -> Result<Rat> {
    futaki_from_expansions(&oracle_expansion(n, lambda, rs, alphas, 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::futaki::futaki_projective_ci;
    use crate::{rat, rat_int};

    fn big(i: i64) -> BigInt {
        BigInt::from(i)
    }

    #[test]
    fn ambient_section_counts() {
        assert_eq!(h0_ci(3, &[], 2).unwrap(), big(10));
        assert_eq!(h0_ci(3, &[2], 2).unwrap(), big(9));
        // below the cutoff the correction vanishes
        assert_eq!(h0_ci(4, &[3], 2).unwrap(), h0_ci(4, &[], 2).unwrap());
    }

    /// Direct monomial count in the quotient by powers of distinct variables,
    /// a second brute force for regular monomial sequences.
    fn quotient_count(n: usize, caps: &[i64], m: i64) -> BigInt {
        let mut count = BigInt::zero();
        for_each_monomial(n + 1, m, |a| {
            if a.iter().zip(caps).all(|(&ai, &cap)| ai < cap) {
                count += 1;
            }
        });
        count
    }

    #[test]
    fn koszul_count_matches_quotient_count() {
        for n in 1..=3usize {
            for rs in [vec![2i64], vec![2, 3], vec![3]] {
                if rs.len() > n {
                    continue;
                }
                for m in 0..=6i64 {
                    assert_eq!(
                        h0_ci(n, &rs, m).unwrap(),
                        quotient_count(n, &rs, m),
                        "n={n} rs={rs:?} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn ambient_weight_vanishes_for_traceless_action() {
        for m in 0..6 {
            assert_eq!(w_ci(3, &[3, 1, -1, -3], &[], &[], m).unwrap(), big(0));
        }
    }

    #[test]
    fn monomial_space_dimension_and_weight() {
        let lambda = [2, -1, -1];
        let space = WeightedMonomialSpace::new(2, 3, &lambda);
        assert_eq!(space.dim(), big(10));
        // sum over |a| = 3 of -(2 a_0 - a_1 - a_2); the traceless action
        // still gives zero in total
        assert_eq!(space.total_weight(), big(0));
        assert_eq!(WeightedMonomialSpace::new(2, -1, &lambda).dim(), big(0));

        // non-traceless sanity: degree-1 space has weight -sum(lambda)
        let skew = [3, 0, 0];
        assert_eq!(WeightedMonomialSpace::new(2, 1, &skew).total_weight(), big(-3));
    }

    #[test]
    fn weight_of_a_point_on_the_line() {
        // z_1 cuts out [1:0]; O(m) there has weight -m lambda_0
        let lambda = [5, -5];
        for m in 1..6 {
            assert_eq!(
                w_ci(1, &lambda, &[-lambda[1]], &[1], m).unwrap(),
                big(-m * lambda[0])
            );
        }
    }

    #[test]
    fn zero_twist_has_zero_weight() {
        assert_eq!(w_ci(3, &[3, 1, -1, -3], &[-6], &[2], 0).unwrap(), big(0));
    }

    #[test]
    fn extract_expansion_examples() {
        // h^0(P^2, O(m)) = (m+1)(m+2)/2
        let samples: Vec<(i64, BigInt, BigInt)> = (1..=6)
            .map(|m| (m, h0_ci(2, &[], m).unwrap(), big(0)))
            .collect();
        let c = extract_expansion(&samples, 2).unwrap();
        assert_eq!((c.d0, c.d1), (rat(1, 2), rat(3, 2)));
        assert_eq!((c.a0, c.a1), (rat_int(0), rat_int(0)));

        // quadric surface: h^0 = (m+1)^2
        let c = oracle_expansion(3, &[3, 1, -1, -3], &[2], &[0], 1).unwrap();
        assert_eq!((c.d0, c.d1), (rat_int(1), rat_int(2)));
    }

    #[test]
    fn extract_expansion_rejects_non_polynomial_samples() {
        let samples: Vec<(i64, BigInt, BigInt)> =
            (1..=6).map(|m| (m, big(m * m), big(1 << m))).collect();
        assert!(matches!(
            extract_expansion(&samples, 1),
            Err(Error::NotPolynomial(_))
        ));
    }

    #[test]
    fn oracle_matches_closed_form_on_the_quadric() {
        let lambda = [3, 1, -1, -3];
        // z_0^2 has weight -6, z_0 z_3 weight 0
        for (alpha, expected) in [(-6i64, rat_int(2)), (0, rat_int(0))] {
            let f = oracle_futaki(3, &lambda, &[2], &[alpha]).unwrap();
            assert_eq!(f, expected);
            assert_eq!(
                f,
                futaki_projective_ci(3, &[2], &[rat_int(alpha)]).unwrap()
            );
        }
    }

    #[test]
    fn oracle_invariant_under_polarization_power() {
        let lambda = [3, 1, -1, -3];
        let once = futaki_from_expansions(&oracle_expansion(3, &lambda, &[2], &[-6], 1).unwrap());
        let twice = futaki_from_expansions(&oracle_expansion(3, &lambda, &[2], &[-6], 2).unwrap());
        assert_eq!(once.unwrap(), twice.unwrap());
    }
}
