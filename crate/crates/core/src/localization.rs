//! Exact equivariant integration by Atiyah-Bott fixed-point sums.
//!
//! An integrand is a product of Chern-class factors of the modeled bundles.
//! At an isolated fixed point each factor evaluates to an elementary
//! symmetric polynomial of the restriction weights, and the integral is the
//! sum over fixed points of these products divided by the product of tangent
//! weights. The equivariant parameter is normalized to 1 throughout, so
//! integrals of classes whose degree exceeds the ambient dimension come out
//! as plain rationals.

use crate::chern::elem_sym;
use crate::error::Error;
use crate::grassmann::{bundle_weights, fixed_points, tangent_weights, Ambient, BundleExpr, OnePs};
use crate::sampling::distinct_weights;
use crate::{Rat, Result};
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// One Chern-class factor `c_{chern_index}(bundle)^exponent`.
///
/// Equivariant factors use the bundle's linearization shift; ordinary factors
/// always use the unshifted weights (their value only matters in integrals of
/// degree equal to the ambient dimension, where the lift is irrelevant).
#[derive(Debug, Clone)]
pub struct Factor {
    pub bundle: BundleExpr,
    pub chern_index: usize,
    pub exponent: usize,
    pub equivariant: bool,
}

impl Factor {
    pub fn equivariant(bundle: BundleExpr, chern_index: usize, exponent: usize) -> Self {
        Factor { bundle, chern_index, exponent, equivariant: true }
    }

    pub fn ordinary(bundle: BundleExpr, chern_index: usize, exponent: usize) -> Self {
        Factor { bundle, chern_index, exponent, equivariant: false }
    }
}

/// Product of Chern-class factors.
#[derive(Debug, Clone, Default)]
pub struct IntegrandMonomial {
    pub factors: Vec<Factor>,
}

impl IntegrandMonomial {
    pub fn new(factors: Vec<Factor>) -> Self {
        IntegrandMonomial { factors }
    }

    /// Total cohomological degree.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.chern_index * f.exponent).sum()
    }
}

fn check_distinct(one_ps: &OnePs) -> Result<()> {
    if !one_ps.is_distinct() {
        return Err(Error::NonGenericWeights(format!(
            "repeated entries in {:?} give non-isolated fixed points",
            one_ps.weights()
        )));
    }
    Ok(())
}

/// Equivariant integral of the monomial over the ambient. Requires pairwise
/// distinct weights.
pub fn integrate(ambient: &Ambient, monomial: &IntegrandMonomial, one_ps: &OnePs) -> Result<Rat> {
    integrate_sum(ambient, &[(Rat::one(), monomial.clone())], one_ps)
}

/// Equivariant integral of a rational combination of monomials.
pub fn integrate_sum(
    ambient: &Ambient,
    terms: &[(Rat, IntegrandMonomial)],
    one_ps: &OnePs,
) -> Result<Rat> {
    let (k, n_big) = ambient.plane_params();
    if one_ps.len() != n_big {
        return Err(Error::invalid(format!(
            "one-parameter subgroup has {} weights, ambient {ambient} needs {n_big}",
            one_ps.len()
        )));
    }
    check_distinct(one_ps)?;

    let mut total = Rat::zero();
    for point in fixed_points(k, n_big)? {
        let tangent: Rat = tangent_weights(&point, one_ps).into_iter().product();
        debug_assert!(!tangent.is_zero());
        let mut numerator = Rat::zero();
        for (coeff, monomial) in terms {
            let mut value = coeff.clone();
            for factor in &monomial.factors {
                if value.is_zero() {
                    break;
                }
                let bundle = if factor.equivariant {
                    factor.bundle.clone()
                } else {
                    factor.bundle.unshifted()
                };
                let ws = bundle_weights(&bundle, &point, one_ps)?;
                let e = elem_sym(factor.chern_index, &ws);
                for _ in 0..factor.exponent {
                    value *= e.clone();
                }
            }
            numerator += value;
        }
        total += numerator / tangent.clone();
    }
    Ok(total)
}

/// How many internally generated weight vectors an ordinary integral is
/// evaluated at before the common value is accepted.
pub const ORDINARY_SAMPLES: usize = 3;
const ORDINARY_SEED: u64 = 0x0dd1_9a17;

/// Ordinary (non-equivariant) Chern number: the integrand degree must equal
/// the ambient dimension. Evaluates the fixed-point sum at several internally
/// generated distinct weight vectors and insists the results agree, which
/// catches degree bookkeeping mistakes.
pub fn integrate_ordinary(ambient: &Ambient, monomial: &IntegrandMonomial) -> Result<Rat> {
    integrate_ordinary_sum(ambient, &[(Rat::one(), monomial.clone())])
}

/// As [`integrate_ordinary_sum`] with the default sample count.
pub fn integrate_ordinary_sum(ambient: &Ambient, terms: &[(Rat, IntegrandMonomial)]) -> Result<Rat> {
    integrate_ordinary_sum_with(ambient, terms, ORDINARY_SAMPLES)
}

/// Ordinary Chern number of a rational combination of monomials, each of
/// degree equal to the ambient dimension, stabilized over `samples` weight
/// vectors.
pub fn integrate_ordinary_sum_with(
    ambient: &Ambient,
    terms: &[(Rat, IntegrandMonomial)],
    samples: usize,
) -> Result<Rat> {
    let dim = ambient.dim();
    for (_, m) in terms {
        if m.degree() != dim {
            return Err(Error::invalid(format!(
                "ordinary integrand degree {} differs from dim {ambient} = {dim}",
                m.degree()
            )));
        }
    }
    let n_big = ambient.plane_params().1;
    let mut rng = ChaCha8Rng::seed_from_u64(ORDINARY_SEED);
    let mut common: Option<Rat> = None;
    for _ in 0..samples.max(1) {
        let nu = OnePs::new(distinct_weights(&mut rng, n_big, 25), false)?;
        let value = integrate_sum(ambient, terms, &nu)?;
        match &common {
            None => common = Some(value),
            Some(prev) if *prev == value => {}
            Some(prev) => {
                return Err(Error::Inconsistent(format!(
                    "ordinary integral changed across weight samples: {prev} vs {value}"
                )))
            }
        }
    }
    Ok(common.expect("at least one sample"))
}

/// Hypothesis integral of the weight-proportional Futaki form for
/// `E = wedge^l Q` with the trace-zero-induced linearization:
///
/// `int c_rank(E)^d c_1(E)^{dim - d*rank + 1}`
///
/// over `G(k, N)`. On a projective ambient (`k = 1`) the construction uses
/// `O(l)` in place of the exterior power, matching the hyperplane-bundle
/// convention there. Returns the exact value; the contract is that it
/// vanishes.
pub fn sl_vanishing(k: usize, n_big: usize, l: usize, d: usize, one_ps: &OnePs) -> Result<Rat> {
    let ambient = Ambient::grassmannian(k, n_big)?;
    if !one_ps.is_sl() {
        return Err(Error::invalid("vanishing check needs a trace-zero subgroup"));
    }
    let bundle = hypothesis_bundle(k, n_big, l)?;
    let rank = bundle.rank(&ambient)?;
    let dim = ambient.dim();
    let c1_exp = (dim + 1) as i64 - (d * rank) as i64;
    if c1_exp < 0 {
        return Err(Error::invalid(format!(
            "degree bookkeeping: dim {dim} cannot absorb {d} copies of rank {rank}"
        )));
    }
    let monomial = IntegrandMonomial::new(vec![
        Factor::equivariant(bundle.clone(), rank, d),
        Factor::equivariant(bundle, 1, c1_exp as usize),
    ]);
    integrate(&ambient, &monomial, one_ps)
}

/// Bundle whose top Chern class powers enter the vanishing hypothesis.
pub(crate) fn hypothesis_bundle(k: usize, n_big: usize, l: usize) -> Result<BundleExpr> {
    use crate::grassmann::BundleKind;
    if l == 0 || l > n_big - k {
        return Err(Error::invalid(format!(
            "exterior power {l} outside 1..={}",
            n_big - k
        )));
    }
    Ok(if k == 1 {
        BundleExpr::new(BundleKind::DetQuotientPower(l as i64))
    } else {
        BundleExpr::new(BundleKind::ExteriorQuotient(l))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::BundleKind;
    use crate::sampling::distinct_sl_weights;
    use crate::{rat, rat_int};

    fn o(r: i64) -> BundleExpr {
        BundleExpr::new(BundleKind::LinePower(r))
    }

    #[test]
    fn degree_deficient_integrals_vanish() {
        let p1 = Ambient::projective(1).unwrap();
        let nu = OnePs::sl(vec![1, -1]).unwrap();
        let one = IntegrandMonomial::new(vec![]);
        assert_eq!(integrate(&p1, &one, &nu).unwrap(), rat_int(0));

        let g25 = Ambient::grassmannian(2, 5).unwrap();
        let nu = OnePs::sl(vec![-2, -1, 0, 1, 2]).unwrap();
        let sigma1 = IntegrandMonomial::new(vec![Factor::equivariant(
            BundleExpr::new(BundleKind::DetQuotientPower(1)),
            1,
            3,
        )]);
        assert_eq!(integrate(&g25, &sigma1, &nu).unwrap(), rat_int(0));
    }

    #[test]
    fn hyperplane_class_on_p1() {
        let p1 = Ambient::projective(1).unwrap();
        let nu = OnePs::sl(vec![1, -1]).unwrap();
        let m = IntegrandMonomial::new(vec![Factor::equivariant(o(1), 1, 1)]);
        assert_eq!(integrate(&p1, &m, &nu).unwrap(), rat_int(1));
    }

    #[test]
    fn hyperplane_top_power_vanishes_under_sl() {
        for n in 2..=4usize {
            let pn = Ambient::projective(n).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(5);
            for _ in 0..3 {
                let nu = OnePs::sl(distinct_sl_weights(&mut rng, n + 1, 8)).unwrap();
                let m = IntegrandMonomial::new(vec![Factor::equivariant(o(1), 1, n + 1)]);
                assert_eq!(integrate(&pn, &m, &nu).unwrap(), rat_int(0));
            }
        }
    }

    #[test]
    fn repeated_weights_are_rejected() {
        let p2 = Ambient::projective(2).unwrap();
        let nu = OnePs::sl(vec![1, 1, -2]).unwrap();
        let m = IntegrandMonomial::new(vec![Factor::equivariant(o(1), 1, 2)]);
        assert!(matches!(
            integrate(&p2, &m, &nu),
            Err(Error::NonGenericWeights(_))
        ));
    }

    #[test]
    fn ordinary_degrees_match_pieri() {
        use crate::grassmann::pieri_degree;
        for (k, n_big) in [(1, 4), (2, 5), (2, 6), (4, 6), (3, 6)] {
            let ambient = Ambient::grassmannian(k, n_big).unwrap();
            let m = IntegrandMonomial::new(vec![Factor::ordinary(
                BundleExpr::new(BundleKind::DetQuotientPower(1)),
                1,
                ambient.dim(),
            )]);
            assert_eq!(
                integrate_ordinary(&ambient, &m).unwrap(),
                rat_int(pieri_degree(k, n_big).unwrap() as i64),
                "sigma_1^dim on G({k},{n_big})"
            );
        }
    }

    #[test]
    fn ordinary_integrals_ignore_shifts() {
        let p3 = Ambient::projective(3).unwrap();
        let shifted = o(1).with_shift(rat(7, 3));
        let m = IntegrandMonomial::new(vec![Factor::equivariant(shifted, 1, 3)]);
        // degree = dim, so the shift cannot matter
        assert_eq!(integrate_ordinary(&p3, &m).unwrap(), rat_int(1));
    }

    #[test]
    fn integrate_is_linear_over_monomials() {
        let g24 = Ambient::grassmannian(2, 4).unwrap();
        let nu = OnePs::sl(vec![-3, -1, 1, 3]).unwrap();
        let q = BundleExpr::new(BundleKind::Quotient);
        let a = IntegrandMonomial::new(vec![Factor::equivariant(q.clone(), 2, 2)]);
        let b = IntegrandMonomial::new(vec![
            Factor::equivariant(q.clone(), 1, 2),
            Factor::equivariant(q, 2, 1),
        ]);
        let lhs = integrate_sum(
            &g24,
            &[(rat(5, 3), a.clone()), (rat(-7, 2), b.clone())],
            &nu,
        )
        .unwrap();
        let rhs = rat(5, 3) * integrate(&g24, &a, &nu).unwrap()
            + rat(-7, 2) * integrate(&g24, &b, &nu).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn vanishing_hypothesis_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (k, n_big, l, d) in [(2usize, 5usize, 3usize, 3usize), (2, 4, 1, 1), (1, 4, 3, 2), (1, 4, 1, 2)] {
            for _ in 0..3 {
                let nu = OnePs::sl(distinct_sl_weights(&mut rng, n_big, 9)).unwrap();
                assert_eq!(
                    sl_vanishing(k, n_big, l, d, &nu).unwrap(),
                    rat_int(0),
                    "({k},{n_big},{l},{d}) at {:?}",
                    nu.weights()
                );
            }
        }
    }
}
