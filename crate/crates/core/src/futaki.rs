//! Closed-form Futaki and Chow-weight evaluators for complete intersections
//! cut out by semi-invariant sections, built on the localization engine.
//!
//! Conventions, fixed once here:
//!
//! * Every evaluator accepts a [`Scenario`] describing the ambient, the
//!   polarization, the acting one-parameter subgroup, the family of bundles
//!   carrying the sections, and the section weights.
//! * For a family of powers `L^{r_j}` of the polarization, the section
//!   bundles always carry the linearization induced by the *unshifted*
//!   polarization atom, so section weights are absolute data independent of
//!   any shift applied to the polarization itself.
//! * For an explicit vector family the bundle's shift is part of the data and
//!   the section weights refer to that linearization.
//! * The compact vector-family formula is only valid in the normalization
//!   where the polarization weight equals the tangent-weight sum at every
//!   fixed point; [`futaki_vector_family`] detects the deviation and
//!   renormalizes bundle shifts and section weights before evaluating, which
//!   is what makes its output independent of linearization shifts.

use crate::error::Error;
use crate::grassmann::{
    fixed_points, linearization_compat, weight_sum, Ambient, BundleExpr, BundleKind, OnePs,
};
use crate::localization::{integrate_ordinary_sum, integrate_sum, Factor, IntegrandMonomial};
use crate::sampling::distinct_sl_weights;
use crate::{factorial, rat, rat_int, Rat, Result};
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Leading coefficients of the weight and dimension expansions of a polarized
/// variety: `w(V, L^m) = a0 m^{d+1} + a1 m^d + ...` and
/// `h^0(V, L^m) = d0 m^d + d1 m^{d-1} + ...`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionCoeffs {
    pub a0: Rat,
    pub a1: Rat,
    pub d0: Rat,
    pub d1: Rat,
}

/// Normalized Futaki invariant from expansion coefficients:
/// `a0 d1 / d0^2 - a1 / d0`.
pub fn futaki_from_expansions(c: &ExpansionCoeffs) -> Result<Rat> {
    if c.d0.is_zero() {
        return Err(Error::invalid("degree coefficient d0 vanishes"));
    }
    Ok(c.a0.clone() * c.d1.clone() / (c.d0.clone() * c.d0.clone()) - c.a1.clone() / c.d0.clone())
}

/// Futaki invariant of an anticanonically polarized variety with the natural
/// linearization: `-a0 / (2 d0)`.
pub fn anticanonical_futaki(a0: &Rat, d0: &Rat) -> Result<Rat> {
    if d0.is_zero() {
        return Err(Error::invalid("degree coefficient d0 vanishes"));
    }
    Ok(-a0.clone() / (rat_int(2) * d0.clone()))
}

/// Family of bundles whose sections cut out the intersection.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `s` copies of a fixed bundle `E` with `(det E)^q = L^p` as linearized
    /// bundles.
    Vector { bundle: BundleExpr, copies: usize, p: i64, q: i64 },
    /// Powers `L^{r_1}, ..., L^{r_s}` of the polarization.
    LinePowers { powers: Vec<i64> },
}

impl Family {
    pub fn section_count(&self) -> usize {
        match self {
            Family::Vector { copies, .. } => *copies,
            Family::LinePowers { powers } => powers.len(),
        }
    }
}

/// Full problem description.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub ambient: Ambient,
    pub polarization: BundleExpr,
    pub one_ps: OnePs,
    pub family: Family,
    pub section_weights: Vec<Rat>,
    pub sections: Option<crate::degeneration::LinearSystem>,
}

impl Scenario {
    pub fn new(
        ambient: Ambient,
        polarization: BundleExpr,
        one_ps: OnePs,
        family: Family,
        section_weights: Vec<Rat>,
    ) -> Result<Self> {
        let s = Scenario {
            ambient,
            polarization,
            one_ps,
            family,
            section_weights,
            sections: None,
        };
        s.validate()?;
        Ok(s)
    }

    /// Complete intersection of hypersurfaces of degrees `powers` in `P^n`
    /// under a trace-zero subgroup, polarized by the hyperplane bundle.
    pub fn projective_ci(
        n: usize,
        lambda: Vec<i64>,
        powers: Vec<i64>,
        alphas: Vec<Rat>,
    ) -> Result<Self> {
        Scenario::new(
            Ambient::projective(n)?,
            BundleExpr::new(BundleKind::LinePower(1)),
            OnePs::sl(lambda)?,
            Family::LinePowers { powers },
            alphas,
        )
    }

    pub fn validate(&self) -> Result<()> {
        let (_, n_big) = self.ambient.plane_params();
        if self.one_ps.len() != n_big {
            return Err(Error::invalid(format!(
                "one-parameter subgroup has {} weights, ambient {} needs {n_big}",
                self.one_ps.len(),
                self.ambient
            )));
        }
        if self.polarization.rank(&self.ambient)? != 1 {
            return Err(Error::invalid("polarization must be a line bundle"));
        }
        if self.section_weights.len() != self.family.section_count() {
            return Err(Error::invalid(format!(
                "{} section weights for {} sections",
                self.section_weights.len(),
                self.family.section_count()
            )));
        }
        match &self.family {
            Family::Vector { bundle, copies, q, .. } => {
                let rank = bundle.rank(&self.ambient)?;
                if *q == 0 {
                    return Err(Error::invalid("family exponent q must be nonzero"));
                }
                if copies * rank > self.ambient.dim() {
                    return Err(Error::invalid(
                        "expected codimension exceeds the ambient dimension",
                    ));
                }
            }
            Family::LinePowers { powers } => {
                if powers.iter().any(|&r| r < 1) {
                    return Err(Error::invalid("section degrees must be >= 1"));
                }
                if powers.len() > self.ambient.dim() {
                    return Err(Error::invalid(
                        "expected codimension exceeds the ambient dimension",
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn alpha_sum(&self) -> Rat {
        self.section_weights.iter().cloned().sum()
    }

    pub fn dim_x(&self) -> Result<usize> {
        let total: usize = self.members()?.iter().map(|m| m.rank).sum();
        Ok(self.ambient.dim() - total)
    }

    /// The family as a flat list of (bundle, rank, section weight) triples.
    pub(crate) fn members(&self) -> Result<Vec<Member>> {
        match &self.family {
            Family::Vector { bundle, copies, .. } => {
                let rank = bundle.rank(&self.ambient)?;
                Ok((0..*copies)
                    .map(|j| Member {
                        bundle: bundle.clone(),
                        rank,
                        alpha: self.section_weights[j].clone(),
                    })
                    .collect())
            }
            Family::LinePowers { powers } => powers
                .iter()
                .zip(&self.section_weights)
                .map(|(&r, alpha)| {
                    Ok(Member {
                        bundle: self.polarization.unshifted().power(r)?,
                        rank: 1,
                        alpha: alpha.clone(),
                    })
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Member {
    pub bundle: BundleExpr,
    pub rank: usize,
    pub alpha: Rat,
}

/// One named exact check performed along the way.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub value: Option<Rat>,
}

impl Check {
    pub fn new(name: &str, pass: bool, value: Option<Rat>) -> Self {
        Check { name: name.to_string(), pass, value }
    }
}

/// Futaki invariant together with the diagnostics the formulas produce.
#[derive(Debug, Clone)]
pub struct FutakiReport {
    pub futaki: Rat,
    pub a0: Option<Rat>,
    pub a1: Option<Rat>,
    pub d0: Option<Rat>,
    pub d1: Option<Rat>,
    pub c_const: Option<Rat>,
    pub t_const: Option<Rat>,
    pub t_bound: Option<Rat>,
    pub mu: Option<Rat>,
    pub alpha_sum: Rat,
    pub fano: Option<bool>,
    pub is_product: Option<bool>,
    pub checks: Vec<Check>,
}

impl FutakiReport {
    pub fn new(futaki: Rat, alpha_sum: Rat) -> Self {
        FutakiReport {
            futaki,
            a0: None,
            a1: None,
            d0: None,
            d1: None,
            c_const: None,
            t_const: None,
            t_bound: None,
            mu: None,
            alpha_sum,
            fano: None,
            is_product: None,
            checks: Vec::new(),
        }
    }
}

fn cb_factors(members: &[Member], equivariant: bool) -> Vec<Factor> {
    members
        .iter()
        .map(|m| {
            if equivariant {
                Factor::equivariant(m.bundle.clone(), m.rank, 1)
            } else {
                Factor::ordinary(m.bundle.clone(), m.rank, 1)
            }
        })
        .collect()
}

fn anticanonical() -> BundleExpr {
    BundleExpr::new(BundleKind::AntiCanonical)
}

fn monomial(factors: Vec<Factor>) -> IntegrandMonomial {
    IntegrandMonomial::new(factors)
}

/// `(d0(X), d1(X))` of the intersection, by ordinary localization:
///
/// `d0(X) = int c_b(B) c_1(L)^{n-b} / (n-b)!`
/// `d1(X) = int c_b(B) (c_1(M) - c_1(B)) c_1(L)^{n-b-1} / (2 (n-b-1)!)`
///
/// with `c_b(B) = prod_j c_{k_j}(E_j)` and `c_1(B) = sum_j c_1(E_j)`.
/// Supports the empty family (the ambient itself). `d1(X) = 0` for a
/// zero-dimensional intersection.
pub fn ci_dim_coeffs(scenario: &Scenario) -> Result<(Rat, Rat)> {
    let members = scenario.members()?;
    dim_coeffs(&scenario.ambient, &scenario.polarization, &members)
}

pub(crate) fn dim_coeffs(
    ambient: &Ambient,
    polarization: &BundleExpr,
    members: &[Member],
) -> Result<(Rat, Rat)> {
    let n = ambient.dim();
    let b: usize = members.iter().map(|m| m.rank).sum();
    if b > n {
        return Err(Error::invalid("codimension exceeds ambient dimension"));
    }
    let d = n - b;
    let l = polarization.clone();

    let mut base = cb_factors(members, false);
    base.push(Factor::ordinary(l.clone(), 1, d));
    let d0 = integrate_ordinary_sum(ambient, &[(Rat::one(), monomial(base))])? / factorial(d);

    if d == 0 {
        return Ok((d0, Rat::zero()));
    }

    let mut terms: Vec<(Rat, IntegrandMonomial)> = Vec::new();
    let mut with_m = cb_factors(members, false);
    with_m.push(Factor::ordinary(anticanonical(), 1, 1));
    with_m.push(Factor::ordinary(l.clone(), 1, d - 1));
    terms.push((Rat::one(), monomial(with_m)));
    for member in members {
        let mut t = cb_factors(members, false);
        t.push(Factor::ordinary(member.bundle.clone(), 1, 1));
        t.push(Factor::ordinary(l.clone(), 1, d - 1));
        terms.push((-Rat::one(), monomial(t)));
    }
    let d1 = integrate_ordinary_sum(ambient, &terms)? / (rat_int(2) * factorial(d - 1));
    Ok((d0, d1))
}

/// `(a0(X), a1(X))` of the intersection by equivariant localization:
///
/// `a0(X) = int c_b^G(B) c_1^G(L)^{n-b+1} / (n-b+1)!`
/// `        - sum_j alpha_j int [prod_{i != j} c_{k_i}(E_i)] c_{k_j-1}(E_j) c_1(L)^{n-b+1} / (n-b+1)!`
///
/// and the analogous degree-lower expansion for `a1(X)`; the formal ratio
/// `c_b(B) c_{k_j-1}(E_j) / c_{k_j}(E_j)` is realized as the literal product
/// over the other members. Requires pairwise distinct weights.
pub fn ci_weight_coeffs(scenario: &Scenario) -> Result<(Rat, Rat)> {
    let members = scenario.members()?;
    weight_coeffs(
        &scenario.ambient,
        &scenario.polarization,
        &members,
        &scenario.one_ps,
    )
}

/// The product `prod_{i != j} c_{k_i}(E_i) * c_{k_j - 1}(E_j)`, ordinary.
fn alpha_correction_factors(members: &[Member], j: usize) -> Vec<Factor> {
    members
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let index = if i == j { m.rank - 1 } else { m.rank };
            Factor::ordinary(m.bundle.clone(), index, 1)
        })
        .collect()
}

pub(crate) fn weight_coeffs(
    ambient: &Ambient,
    polarization: &BundleExpr,
    members: &[Member],
    one_ps: &OnePs,
) -> Result<(Rat, Rat)> {
    let n = ambient.dim();
    let b: usize = members.iter().map(|m| m.rank).sum();
    if b > n {
        return Err(Error::invalid("codimension exceeds ambient dimension"));
    }
    let d = n - b;
    let l = polarization.clone();

    // a0: equivariant leading term minus the weight corrections
    let mut lead = cb_factors(members, true);
    lead.push(Factor::equivariant(l.clone(), 1, d + 1));
    let lead_val = integrate_sum(ambient, &[(Rat::one(), monomial(lead))], one_ps)?;

    let mut a0 = lead_val;
    for (j, member) in members.iter().enumerate() {
        if member.alpha.is_zero() {
            continue;
        }
        let mut t = alpha_correction_factors(members, j);
        t.push(Factor::ordinary(l.clone(), 1, d + 1));
        let val = integrate_ordinary_sum(ambient, &[(Rat::one(), monomial(t))])?;
        a0 -= member.alpha.clone() * val;
    }
    a0 /= factorial(d + 1);

    // a1: equivariant part  int c_b^G(B) (c_1^G(M) - c_1^G(B)) c_1^G(L)^d
    let mut terms: Vec<(Rat, IntegrandMonomial)> = Vec::new();
    let mut with_m = cb_factors(members, true);
    with_m.push(Factor::equivariant(anticanonical(), 1, 1));
    with_m.push(Factor::equivariant(l.clone(), 1, d));
    terms.push((Rat::one(), monomial(with_m)));
    for member in members {
        let mut t = cb_factors(members, true);
        t.push(Factor::equivariant(member.bundle.clone(), 1, 1));
        t.push(Factor::equivariant(l.clone(), 1, d));
        terms.push((-Rat::one(), monomial(t)));
    }
    let mut a1 = integrate_sum(ambient, &terms, one_ps)?;

    // + sum_j k_j alpha_j int c_b(B) c_1(L)^d
    let alpha_rank: Rat = members
        .iter()
        .map(|m| rat_int(m.rank as i64) * m.alpha.clone())
        .sum();
    if !alpha_rank.is_zero() {
        let mut t = cb_factors(members, false);
        t.push(Factor::ordinary(l.clone(), 1, d));
        let val = integrate_ordinary_sum(ambient, &[(Rat::one(), monomial(t))])?;
        a1 += alpha_rank * val;
    }

    // - sum_j alpha_j int [corr_j] (c_1(M) - c_1(B)) c_1(L)^d
    for (j, member) in members.iter().enumerate() {
        if member.alpha.is_zero() {
            continue;
        }
        let mut terms: Vec<(Rat, IntegrandMonomial)> = Vec::new();
        let mut with_m = alpha_correction_factors(members, j);
        with_m.push(Factor::ordinary(anticanonical(), 1, 1));
        with_m.push(Factor::ordinary(l.clone(), 1, d));
        terms.push((Rat::one(), monomial(with_m)));
        for other in members {
            let mut t = alpha_correction_factors(members, j);
            t.push(Factor::ordinary(other.bundle.clone(), 1, 1));
            t.push(Factor::ordinary(l.clone(), 1, d));
            terms.push((-Rat::one(), monomial(t)));
        }
        let val = integrate_ordinary_sum(ambient, &terms)?;
        a1 -= member.alpha.clone() * val;
    }
    a1 /= rat_int(2) * factorial(d);

    Ok((a0, a1))
}

const CERTIFY_SEED: u64 = 0x5e1f_cafe;
const CERTIFY_SAMPLES: usize = 3;

/// Ambient `(a0, a1)` with the given polarization linearization.
///
/// For non-distinct weights this falls back to the trace-zero identity
/// `a0 = a1 = 0`, valid for the unshifted linearizations on these homogeneous
/// ambients; the identity is certified by evaluating both integrals at
/// several sampled distinct trace-zero weight vectors.
pub fn ambient_weight_coeffs(
    ambient: &Ambient,
    polarization: &BundleExpr,
    one_ps: &OnePs,
) -> Result<(Rat, Rat)> {
    if one_ps.is_distinct() {
        return weight_coeffs(ambient, polarization, &[], one_ps);
    }
    if !one_ps.is_sl() || !polarization.shift.is_zero() {
        return Err(Error::NonGenericWeights(
            "repeated weights are only supported for unshifted trace-zero data".into(),
        ));
    }
    certify_sl_ambient_zero(ambient, polarization)?;
    Ok((Rat::zero(), Rat::zero()))
}

fn certify_sl_ambient_zero(ambient: &Ambient, polarization: &BundleExpr) -> Result<()> {
    let n_big = ambient.plane_params().1;
    let mut rng = ChaCha8Rng::seed_from_u64(CERTIFY_SEED);
    for _ in 0..CERTIFY_SAMPLES {
        let nu = OnePs::sl(distinct_sl_weights(&mut rng, n_big, 20))?;
        let (a0, a1) = weight_coeffs(ambient, polarization, &[], &nu)?;
        if !a0.is_zero() || !a1.is_zero() {
            return Err(Error::Inconsistent(format!(
                "expected trace-zero vanishing on {ambient}, got a0 = {a0}, a1 = {a1}"
            )));
        }
    }
    Ok(())
}

/// Futaki invariant of the ambient itself (the empty family).
pub fn ambient_futaki(scenario: &Scenario) -> Result<Rat> {
    let (a0, a1) =
        ambient_weight_coeffs(&scenario.ambient, &scenario.polarization, &scenario.one_ps)?;
    let (d0, d1) = dim_coeffs(&scenario.ambient, &scenario.polarization, &[])?;
    futaki_from_expansions(&ExpansionCoeffs { a0, a1, d0, d1 })
}

/// Futaki invariant of the intersection by the general composition: both
/// expansion pairs from localization, then the defining formula. Requires
/// pairwise distinct weights.
pub fn futaki_ci_general(scenario: &Scenario) -> Result<Rat> {
    let (a0, a1) = ci_weight_coeffs(scenario)?;
    let (d0, d1) = ci_dim_coeffs(scenario)?;
    futaki_from_expansions(&ExpansionCoeffs { a0, a1, d0, d1 })
}

/// Deviation of the polarization from the tangent-sum linearization of the
/// anticanonical bundle; must be the same rational at every fixed point.
fn anticanonical_deviation(
    ambient: &Ambient,
    polarization: &BundleExpr,
    one_ps: &OnePs,
) -> Result<Rat> {
    let (k, n_big) = ambient.plane_params();
    let natural = anticanonical();
    let mut deviation: Option<Rat> = None;
    for point in fixed_points(k, n_big)? {
        let c = weight_sum(polarization, &point, one_ps)? - weight_sum(&natural, &point, one_ps)?;
        match &deviation {
            None => deviation = Some(c),
            Some(prev) if *prev == c => {}
            Some(prev) => {
                return Err(Error::Refused {
                    check: "anticanonical polarization".into(),
                    diagnostic: format!(
                        "polarization deviates from the tangent linearization by {prev} at one fixed point and {c} at another"
                    ),
                })
            }
        }
    }
    Ok(deviation.expect("at least one fixed point"))
}

/// Compact formula for a family of `s` copies of a bundle `E` of rank `k`
/// with `(det E)^q = L^p` on an anticanonically polarized ambient:
///
/// `F = (p s - q) / (2 q) * a0(X) / d0(X)  -  (k / 2) sum_j alpha_j`.
///
/// The linearized compatibility is checked and gates the computation; the
/// evaluation happens in the tangent-sum normalization of the polarization,
/// with bundle shifts and section weights renormalized accordingly.
pub fn futaki_vector_family(scenario: &Scenario) -> Result<FutakiReport> {
    let Family::Vector { bundle, copies, p, q } = &scenario.family else {
        return Err(Error::invalid("this formula needs a vector bundle family"));
    };
    scenario.validate()?;
    let ambient = &scenario.ambient;
    let one_ps = &scenario.one_ps;
    let rank = bundle.rank(ambient)?;
    let n = ambient.dim();
    let s = *copies;
    let d = n - s * rank;

    let mut checks = Vec::new();
    let compat = linearization_compat(bundle, &scenario.polarization, *p, *q, ambient, one_ps)?;
    checks.push(Check::new("linearization_compat", compat, None));
    if !compat {
        return Err(Error::Refused {
            check: "linearization_compat".into(),
            diagnostic: format!("(det E)^{q} and L^{p} differ as linearized bundles"),
        });
    }

    // renormalize to the tangent-sum linearization
    let c = anticanonical_deviation(ambient, &scenario.polarization, one_ps)?;
    let e_shift = rat_int(*p) * c.clone() / (rat_int(rank as i64) * rat_int(*q));
    let bundle_nat = bundle.with_shift(bundle.shift.clone() - e_shift.clone());
    let members: Vec<Member> = scenario
        .section_weights
        .iter()
        .map(|alpha| Member {
            bundle: bundle_nat.clone(),
            rank,
            alpha: alpha.clone() - e_shift.clone(),
        })
        .collect();
    checks.push(Check::new("tangent_normalization", true, Some(c)));

    // a0(X) with the natural polarization
    let natural = anticanonical();
    let mut lead = cb_factors(&members, true);
    lead.push(Factor::equivariant(natural.clone(), 1, d + 1));
    let lead_val = integrate_sum(ambient, &[(Rat::one(), monomial(lead))], one_ps)?;

    let alpha_nat_sum: Rat = members.iter().map(|m| m.alpha.clone()).sum();
    let mut correction = Rat::zero();
    if !alpha_nat_sum.is_zero() && s > 0 {
        let mut t = alpha_correction_factors(&members, 0);
        t.push(Factor::ordinary(natural.clone(), 1, d + 1));
        correction = integrate_ordinary_sum(ambient, &[(Rat::one(), monomial(t))])?;
    }
    let a0x = (lead_val - alpha_nat_sum.clone() * correction) / factorial(d + 1);

    let mut deg = cb_factors(&members, false);
    deg.push(Factor::ordinary(natural, 1, d));
    let d0x = integrate_ordinary_sum(ambient, &[(Rat::one(), monomial(deg))])? / factorial(d);
    if d0x.is_zero() {
        return Err(Error::invalid("degree coefficient d0(X) vanishes"));
    }

    let futaki = rat(p * s as i64 - q, 2 * q) * a0x.clone() / d0x.clone()
        - rat(rank as i64, 2) * alpha_nat_sum;

    let mut report = FutakiReport::new(futaki, scenario.alpha_sum());
    report.a0 = Some(a0x);
    report.d0 = Some(d0x);
    report.fano = Some(q - p * s as i64 > 0);
    report.checks = checks;
    Ok(report)
}

/// Weight-proportional form `F = -C T sum_j alpha_j`, valid when the family
/// linearization satisfies `int c_k^G(E)^s c_1^G(E)^{n-sk+1} = 0`. `C` and
/// `T` are ordinary characteristic numbers of `E`; the hypothesis integral is
/// evaluated exactly and gates the computation.
pub fn futaki_weight_multiple(scenario: &Scenario) -> Result<FutakiReport> {
    let Family::Vector { bundle, copies, p, q } = &scenario.family else {
        return Err(Error::invalid("this formula needs a vector bundle family"));
    };
    scenario.validate()?;
    let ambient = &scenario.ambient;
    let one_ps = &scenario.one_ps;
    let rank = bundle.rank(ambient)?;
    let n = ambient.dim();
    let s = *copies;
    if s == 0 {
        return Err(Error::invalid("the weight-proportional form needs at least one section"));
    }
    let d = n - s * rank;

    let mut checks = Vec::new();
    let compat = linearization_compat(bundle, &scenario.polarization, *p, *q, ambient, one_ps)?;
    checks.push(Check::new("linearization_compat", compat, None));
    if !compat {
        return Err(Error::Refused {
            check: "linearization_compat".into(),
            diagnostic: format!("(det E)^{q} and L^{p} differ as linearized bundles"),
        });
    }
    anticanonical_deviation(ambient, &scenario.polarization, one_ps)?;

    let hypothesis = integrate_sum(
        ambient,
        &[(
            Rat::one(),
            monomial(vec![
                Factor::equivariant(bundle.clone(), rank, s),
                Factor::equivariant(bundle.clone(), 1, d + 1),
            ]),
        )],
        one_ps,
    )?;
    let hypothesis_ok = hypothesis.is_zero();
    checks.push(Check::new(
        "hypothesis_vanishing",
        hypothesis_ok,
        Some(hypothesis.clone()),
    ));
    if !hypothesis_ok {
        return Err(Error::Refused {
            check: "hypothesis_vanishing".into(),
            diagnostic: format!("hypothesis integral = {hypothesis}"),
        });
    }

    let base = integrate_ordinary_sum(
        ambient,
        &[(
            Rat::one(),
            monomial(vec![
                Factor::ordinary(bundle.clone(), rank, s),
                Factor::ordinary(bundle.clone(), 1, d),
            ]),
        )],
    )?;
    if base.is_zero() {
        return Err(Error::invalid("degree-type integral of E vanishes"));
    }
    let c_const = Rat::one() / (rat_int(2 * p * (d as i64 + 1)) * base.clone());
    checks.push(Check::new("c_positive", c_const.is_positive(), Some(c_const.clone())));

    let mixed = integrate_ordinary_sum(
        ambient,
        &[(
            Rat::one(),
            monomial(vec![
                Factor::ordinary(bundle.clone(), rank, s - 1),
                Factor::ordinary(bundle.clone(), rank - 1, 1),
                Factor::ordinary(bundle.clone(), 1, d + 1),
            ]),
        )],
    )?;
    let t_const =
        rat_int(rank as i64 * p * (d as i64 + 1)) * base - rat_int(q - p * s as i64) * mixed;

    let t_bound = {
        let mut pw = Rat::one();
        for _ in 0..d + 1 {
            pw *= rat_int(rank as i64);
        }
        pw * rat_int(p * (n as i64 + 1) - rank as i64 * q)
    };
    checks.push(Check::new("t_bound", t_const >= t_bound, Some(t_bound.clone())));

    let alpha_sum = scenario.alpha_sum();
    let futaki = -c_const.clone() * t_const.clone() * alpha_sum.clone();

    let mut report = FutakiReport::new(futaki, alpha_sum);
    report.c_const = Some(c_const);
    report.t_const = Some(t_const);
    report.t_bound = Some(t_bound);
    report.fano = Some(q - p * s as i64 > 0);
    report.checks = checks;
    Ok(report)
}

/// Closed form on `P^n` for hypersurfaces of degrees `rs` and section weights
/// `alphas` under a trace-zero subgroup:
///
/// `F = 1/2 ( -sum_j alpha_j + (n+1 - sum_j r_j)/(n+1-s) * sum_j alpha_j / r_j )`.
pub fn futaki_projective_ci(n: usize, rs: &[i64], alphas: &[Rat]) -> Result<Rat> {
    if rs.len() != alphas.len() {
        return Err(Error::invalid("one weight per hypersurface degree"));
    }
    if rs.iter().any(|&r| r < 1) {
        return Err(Error::invalid("hypersurface degrees must be >= 1"));
    }
    let s = rs.len();
    if s > n {
        return Err(Error::invalid("more hypersurfaces than the dimension allows"));
    }
    let alpha_sum: Rat = alphas.iter().cloned().sum();
    let scaled: Rat = rs
        .iter()
        .zip(alphas)
        .map(|(&r, a)| a.clone() / rat_int(r))
        .sum();
    let r_sum: i64 = rs.iter().sum();
    Ok(rat(1, 2) * (-alpha_sum + rat(n as i64 + 1 - r_sum, n as i64 + 1 - s as i64) * scaled))
}

/// General closed form for sections of powers `L^{r_j}` of the polarization:
///
/// `F = F(M, L) + 1/2 ( -sum_j u_j r_j + (2 d1/(n d0) - sum_j r_j)/(n+1-s) sum_j u_j )`
///
/// with `u_j = alpha_j / r_j - a0/d0` and the ambient coefficients taken in
/// the unshifted normalization. Handles repeated weight entries through the
/// certified trace-zero vanishing path.
pub fn futaki_line_family(scenario: &Scenario) -> Result<Rat> {
    let Family::LinePowers { powers } = &scenario.family else {
        return Err(Error::invalid("this formula needs a family of polarization powers"));
    };
    scenario.validate()?;
    let n = scenario.ambient.dim();
    let s = powers.len();

    let natural = scenario.polarization.unshifted();
    let (a0, a1) = ambient_weight_coeffs(&scenario.ambient, &natural, &scenario.one_ps)?;
    let (d0, d1) = dim_coeffs(&scenario.ambient, &natural, &[])?;
    if d0.is_zero() {
        return Err(Error::invalid("ambient degree coefficient vanishes"));
    }
    let f_ambient = futaki_from_expansions(&ExpansionCoeffs {
        a0: a0.clone(),
        a1,
        d0: d0.clone(),
        d1: d1.clone(),
    })?;

    let ratio = a0 / d0.clone();
    let us: Vec<Rat> = powers
        .iter()
        .zip(&scenario.section_weights)
        .map(|(&r, alpha)| alpha.clone() / rat_int(r) - ratio.clone())
        .collect();
    let u_sum: Rat = us.iter().cloned().sum();
    let ur_sum: Rat = us
        .iter()
        .zip(powers)
        .map(|(u, &r)| u.clone() * rat_int(r))
        .sum();
    let r_sum: i64 = powers.iter().sum();

    let index_like = rat_int(2) * d1 / (rat_int(n as i64) * d0);
    let correction = rat(1, 2)
        * (-ur_sum + (index_like - rat_int(r_sum)) / rat_int(n as i64 + 1 - s as i64) * u_sum);
    Ok(f_ambient + correction)
}

/// Chow weight `mu(X, M, L) = a0(M)/d0(M) - a0(X)/d0(X)`, evaluated in the
/// unshifted normalization. For a family of equal powers the closed form
/// `1/(n+1-s) sum_j (alpha_j / r - a0/d0)` is evaluated as well and the two
/// must agree exactly.
pub fn chow_weight(scenario: &Scenario) -> Result<Rat> {
    scenario.validate()?;
    let natural_scenario = Scenario {
        polarization: scenario.polarization.unshifted(),
        ..scenario.clone()
    };
    let n = scenario.ambient.dim();
    let s = scenario.family.section_count();

    let equal_power = match &scenario.family {
        Family::LinePowers { powers } if !powers.is_empty() => {
            powers.iter().all(|r| *r == powers[0]).then_some(powers[0])
        }
        _ => None,
    };

    let closed = match equal_power {
        Some(r) => {
            let (a0, _) = ambient_weight_coeffs(
                &natural_scenario.ambient,
                &natural_scenario.polarization,
                &natural_scenario.one_ps,
            )?;
            let (d0, _) =
                dim_coeffs(&natural_scenario.ambient, &natural_scenario.polarization, &[])?;
            if d0.is_zero() {
                return Err(Error::invalid("ambient degree coefficient vanishes"));
            }
            let ratio = a0 / d0;
            let total: Rat = scenario
                .section_weights
                .iter()
                .map(|alpha| alpha.clone() / rat_int(r) - ratio.clone())
                .sum();
            Some(total / rat_int(n as i64 + 1 - s as i64))
        }
        None => None,
    };

    if !scenario.one_ps.is_distinct() {
        // only the closed form is available without isolated fixed points
        return closed.ok_or_else(|| {
            Error::NonGenericWeights(
                "repeated weights need a family of equal polarization powers".into(),
            )
        });
    }

    let (a0, _) = ambient_weight_coeffs(
        &natural_scenario.ambient,
        &natural_scenario.polarization,
        &natural_scenario.one_ps,
    )?;
    let (d0, _) = dim_coeffs(&natural_scenario.ambient, &natural_scenario.polarization, &[])?;
    let (a0x, _) = ci_weight_coeffs(&natural_scenario)?;
    let (d0x, _) = ci_dim_coeffs(&natural_scenario)?;
    if d0.is_zero() || d0x.is_zero() {
        return Err(Error::invalid("degree coefficient vanishes"));
    }
    let ratio_form = a0 / d0 - a0x / d0x;

    if let Some(closed) = closed {
        if closed != ratio_form {
            return Err(Error::Inconsistent(format!(
                "Chow weight closed form {closed} disagrees with coefficient ratios {ratio_form}"
            )));
        }
    }
    Ok(ratio_form)
}

/// Chow-weight form for equal powers `r`:
///
/// `F(X) = F(M, L) - C mu(X, M, L)` with `C = r (n+1)/2 - d1/(n d0) >= 0`.
pub fn futaki_chow_relation(scenario: &Scenario) -> Result<FutakiReport> {
    let Family::LinePowers { powers } = &scenario.family else {
        return Err(Error::invalid("this formula needs a family of polarization powers"));
    };
    scenario.validate()?;
    if powers.is_empty() || powers.iter().any(|r| *r != powers[0]) {
        return Err(Error::invalid("this formula needs equal section degrees"));
    }
    let r = powers[0];
    let n = scenario.ambient.dim();

    let natural = scenario.polarization.unshifted();
    let (d0, d1) = dim_coeffs(&scenario.ambient, &natural, &[])?;
    if d0.is_zero() {
        return Err(Error::invalid("ambient degree coefficient vanishes"));
    }
    let c_const = rat(r * (n as i64 + 1), 2) - d1.clone() / (rat_int(n as i64) * d0.clone());

    let (a0, a1) = ambient_weight_coeffs(&scenario.ambient, &natural, &scenario.one_ps)?;
    let f_ambient = futaki_from_expansions(&ExpansionCoeffs { a0, a1, d0: d0.clone(), d1 })?;

    let mu = chow_weight(scenario)?;
    let futaki = f_ambient.clone() - c_const.clone() * mu.clone();

    let mut report = FutakiReport::new(futaki.clone(), scenario.alpha_sum());
    report.c_const = Some(c_const.clone());
    report.mu = Some(mu.clone());
    report.d0 = Some(d0);
    let mut checks = vec![Check::new(
        "c_nonnegative",
        !c_const.is_negative(),
        Some(c_const.clone()),
    )];
    if f_ambient.is_zero() {
        // with vanishing ambient invariant the sign of F is opposite to mu's
        checks.push(Check::new(
            "sign_opposite_to_chow_weight",
            futaki == -c_const * mu,
            None,
        ));
    }
    report.checks = checks;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::BundleKind;

    fn coeffs(a0: i64, a1: i64, d0: i64, d1: i64) -> ExpansionCoeffs {
        ExpansionCoeffs {
            a0: rat_int(a0),
            a1: rat_int(a1),
            d0: rat_int(d0),
            d1: rat_int(d1),
        }
    }

    #[test]
    fn futaki_from_expansion_examples() {
        assert_eq!(futaki_from_expansions(&coeffs(0, 7, 3, 11)).unwrap(), rat(-7, 3));
        assert_eq!(futaki_from_expansions(&coeffs(1, 1, 1, 1)).unwrap(), rat_int(0));
        assert!(futaki_from_expansions(&coeffs(1, 1, 0, 1)).is_err());
    }

    #[test]
    fn anticanonical_form_sign() {
        assert_eq!(anticanonical_futaki(&rat_int(0), &rat_int(5)).unwrap(), rat_int(0));
        assert!(anticanonical_futaki(&rat_int(3), &rat_int(2)).unwrap().is_negative());
    }

    #[test]
    fn anticanonical_form_agrees_with_expansions() {
        // The tangent-sum lift on the homogeneous ambient has a0 = 0 even for
        // non-traceless weights, and both routes give 0.
        let ambient = Ambient::grassmannian(2, 5).unwrap();
        let nu = OnePs::new(vec![3, 1, 0, -2, 7], false).unwrap();
        let polarization = anticanonical();
        let (a0, a1) = ambient_weight_coeffs(&ambient, &polarization, &nu).unwrap();
        let (d0, d1) = dim_coeffs(&ambient, &polarization, &[]).unwrap();
        assert_eq!(a0, rat_int(0));
        let by_def = futaki_from_expansions(&ExpansionCoeffs {
            a0: a0.clone(),
            a1,
            d0: d0.clone(),
            d1,
        })
        .unwrap();
        assert_eq!(by_def, anticanonical_futaki(&a0, &d0).unwrap());

        // Nontrivial case: the quintic Del Pezzo central fiber, whose natural
        // anticanonical lift is (det Q)^2 twisted by the section-weight sum.
        // The two routes must both give the invariant 3/2 and a0 is nonzero.
        let x = Scenario::new(
            Ambient::grassmannian(2, 5).unwrap(),
            BundleExpr::shifted(BundleKind::DetQuotientPower(2), rat_int(-6)),
            OnePs::sl(vec![-2, -1, 0, 1, 2]).unwrap(),
            Family::Vector {
                bundle: BundleExpr::new(BundleKind::ExteriorQuotient(3)),
                copies: 3,
                p: 1,
                q: 5,
            },
            vec![rat_int(-3), rat_int(-2), rat_int(-1)],
        )
        .unwrap();
        let (a0x, a1x) = ci_weight_coeffs(&x).unwrap();
        let (d0x, d1x) = ci_dim_coeffs(&x).unwrap();
        assert!(!a0x.is_zero());
        let by_def = futaki_from_expansions(&ExpansionCoeffs {
            a0: a0x.clone(),
            a1: a1x,
            d0: d0x.clone(),
            d1: d1x,
        })
        .unwrap();
        assert_eq!(by_def, rat(3, 2));
        assert_eq!(anticanonical_futaki(&a0x, &d0x).unwrap(), rat(3, 2));
    }

    fn quadric_p3(alpha: i64) -> Scenario {
        Scenario::projective_ci(3, vec![3, 1, -1, -3], vec![2], vec![rat_int(alpha)]).unwrap()
    }

    #[test]
    fn dim_coeffs_examples() {
        // quadric surface in P^3
        let (d0, d1) = ci_dim_coeffs(&quadric_p3(0)).unwrap();
        assert_eq!((d0, d1), (rat_int(1), rat_int(2)));

        // ambient projective space
        for n in 1..=4usize {
            let lambda: Vec<i64> = (0..=n as i64).map(|i| 2 * i - n as i64).collect();
            let s = Scenario::projective_ci(n, lambda, vec![], vec![]).unwrap();
            let (d0, d1) = ci_dim_coeffs(&s).unwrap();
            assert_eq!(d0, Rat::one() / factorial(n));
            assert_eq!(d1, rat_int(n as i64 + 1) / (rat_int(2) * factorial(n - 1)));
        }

        // three Plücker hyperplanes in G(2,5)
        let s = Scenario::new(
            Ambient::grassmannian(2, 5).unwrap(),
            BundleExpr::new(BundleKind::DetQuotientPower(1)),
            OnePs::sl(vec![-2, -1, 0, 1, 2]).unwrap(),
            Family::LinePowers { powers: vec![1, 1, 1] },
            vec![rat_int(0); 3],
        )
        .unwrap();
        let (d0, d1) = ci_dim_coeffs(&s).unwrap();
        assert_eq!((d0.clone(), d1.clone()), (rat(5, 6), rat(5, 2)));
        // Fano index two: 2 d1 / ((n-s) d0) = 2
        assert_eq!(rat_int(2) * d1 / (rat_int(3) * d0), rat_int(2));
    }

    #[test]
    fn weight_coeffs_examples() {
        // invariant quadric z0 z3: alpha = 0, leading weight coefficient vanishes
        let (a0, _) = ci_weight_coeffs(&quadric_p3(0)).unwrap();
        assert_eq!(a0, rat_int(0));

        // ambient with trace-zero linearization
        let s = Scenario::projective_ci(3, vec![3, 1, -1, -3], vec![], vec![]).unwrap();
        let (a0, a1) = ci_weight_coeffs(&s).unwrap();
        assert_eq!((a0, a1), (rat_int(0), rat_int(0)));

        // quadric z0^2: alpha = -6; hand-computed expansion w(m) = m^3 - m
        let (a0, a1) = ci_weight_coeffs(&quadric_p3(-6)).unwrap();
        assert_eq!((a0, a1), (rat_int(1), rat_int(0)));
    }

    #[test]
    fn general_composition_matches_projective_closed_form() {
        let s = quadric_p3(-6);
        let f = futaki_ci_general(&s).unwrap();
        assert_eq!(f, rat_int(2));
        assert_eq!(futaki_projective_ci(3, &[2], &[rat_int(-6)]).unwrap(), rat_int(2));
        assert_eq!(futaki_line_family(&s).unwrap(), rat_int(2));
    }

    #[test]
    fn projective_closed_form_examples() {
        assert_eq!(
            futaki_projective_ci(4, &[2, 3], &[rat_int(0), rat_int(0)]).unwrap(),
            rat_int(0)
        );
        // sum r_j = n + 1 kills the second term
        assert_eq!(
            futaki_projective_ci(3, &[2, 2], &[rat_int(3), rat_int(-1)]).unwrap(),
            rat_int(-1)
        );
    }

    fn fano5fold_vector_scenario(alphas: Vec<Rat>) -> Scenario {
        Scenario::new(
            Ambient::grassmannian(4, 6).unwrap(),
            anticanonical(),
            OnePs::sl(vec![-5, -3, -1, 1, 3, 5]).unwrap(),
            Family::Vector {
                bundle: BundleExpr::new(BundleKind::DetQuotientPower(1)),
                copies: 3,
                p: 1,
                q: 6,
            },
            alphas,
        )
        .unwrap()
    }

    #[test]
    fn vector_family_on_the_fano_fivefold() {
        let s = fano5fold_vector_scenario(vec![rat_int(0), rat_int(-2), rat_int(2)]);
        let report = futaki_vector_family(&s).unwrap();
        assert_eq!(report.futaki, rat_int(0));
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "linearization_compat" && c.pass));
    }

    #[test]
    fn vector_family_quintic_instance() {
        // degeneration weights of the generic three-plane at nu = (-2,-1,0,1,2)
        let s = Scenario::new(
            Ambient::grassmannian(2, 5).unwrap(),
            anticanonical(),
            OnePs::sl(vec![-2, -1, 0, 1, 2]).unwrap(),
            Family::Vector {
                bundle: BundleExpr::new(BundleKind::ExteriorQuotient(3)),
                copies: 3,
                p: 1,
                q: 5,
            },
            vec![rat_int(-3), rat_int(-2), rat_int(-1)],
        )
        .unwrap();
        let report = futaki_vector_family(&s).unwrap();
        assert_eq!(report.futaki, rat(3, 2));
    }

    #[test]
    fn vector_family_refuses_incompatible_linearization() {
        let mut s = fano5fold_vector_scenario(vec![rat_int(0); 3]);
        let Family::Vector { p, .. } = &mut s.family else { unreachable!() };
        *p = 2;
        assert!(matches!(futaki_vector_family(&s), Err(Error::Refused { .. })));
    }

    #[test]
    fn weight_multiple_constants_on_g25() {
        let s = Scenario::new(
            Ambient::grassmannian(2, 5).unwrap(),
            anticanonical(),
            OnePs::sl(vec![-2, -1, 0, 1, 2]).unwrap(),
            Family::Vector {
                bundle: BundleExpr::new(BundleKind::DetQuotientPower(1)),
                copies: 3,
                p: 1,
                q: 5,
            },
            vec![rat_int(-3), rat_int(-2), rat_int(-1)],
        )
        .unwrap();
        let report = futaki_weight_multiple(&s).unwrap();
        assert_eq!(report.c_const, Some(rat(1, 40)));
        assert_eq!(report.t_const, Some(rat_int(10)));
        assert_eq!(report.t_bound, Some(rat_int(2)));
        // F = -1/4 sum alpha
        assert_eq!(report.futaki, rat(3, 2));
        assert_eq!(report.fano, Some(true));
    }

    #[test]
    fn line_family_with_trivial_weights_vanishes_on_grassmannians() {
        let s = Scenario::new(
            Ambient::grassmannian(2, 5).unwrap(),
            BundleExpr::new(BundleKind::DetQuotientPower(1)),
            OnePs::sl(vec![-2, -1, 0, 1, 2]).unwrap(),
            Family::LinePowers { powers: vec![1, 1, 1] },
            vec![rat_int(0); 3],
        )
        .unwrap();
        assert_eq!(futaki_line_family(&s).unwrap(), rat_int(0));
    }

    #[test]
    fn line_family_matches_general_composition_on_grassmannians() {
        // unequal powers on the Plücker-polarized G(2,5)
        let s = Scenario::new(
            Ambient::grassmannian(2, 5).unwrap(),
            BundleExpr::new(BundleKind::DetQuotientPower(1)),
            OnePs::sl(vec![-3, -1, 0, 1, 3]).unwrap(),
            Family::LinePowers { powers: vec![1, 2] },
            vec![rat_int(-3), rat_int(4)],
        )
        .unwrap();
        let closed = futaki_line_family(&s).unwrap();
        let general = futaki_ci_general(&s).unwrap();
        assert_eq!(closed, general);
        assert!(!closed.is_zero());
    }

    #[test]
    fn vector_and_chow_routes_agree_on_the_quintic_data() {
        let nu = OnePs::sl(vec![-2, -1, 0, 1, 2]).unwrap();
        let alphas = vec![rat_int(-3), rat_int(-2), rat_int(-1)];
        let vector = Scenario::new(
            Ambient::grassmannian(2, 5).unwrap(),
            anticanonical(),
            nu.clone(),
            Family::Vector {
                bundle: BundleExpr::new(BundleKind::ExteriorQuotient(3)),
                copies: 3,
                p: 1,
                q: 5,
            },
            alphas.clone(),
        )
        .unwrap();
        let line = Scenario::new(
            Ambient::grassmannian(2, 5).unwrap(),
            BundleExpr::new(BundleKind::DetQuotientPower(1)),
            nu,
            Family::LinePowers { powers: vec![1, 1, 1] },
            alphas,
        )
        .unwrap();
        assert_eq!(
            futaki_vector_family(&vector).unwrap().futaki,
            futaki_chow_relation(&line).unwrap().futaki
        );
    }

    #[test]
    fn chow_weight_second_power_consistency() {
        // equal powers r = 2: the closed form is verified against the
        // coefficient ratios inside chow_weight
        let s = Scenario::new(
            Ambient::grassmannian(2, 5).unwrap(),
            BundleExpr::new(BundleKind::DetQuotientPower(1)),
            OnePs::sl(vec![-3, -1, 0, 1, 3]).unwrap(),
            Family::LinePowers { powers: vec![2, 2] },
            vec![rat_int(-4), rat_int(2)],
        )
        .unwrap();
        let mu = chow_weight(&s).unwrap();
        // a0 = 0, so mu = (1/(n+1-s)) sum(alpha_j / 2) = (1/5)(-1)
        assert_eq!(mu, rat(-1, 5));
    }

    #[test]
    fn rank_two_family_routes_agree() {
        // E = Q on G(2,4): rank two, so the weight corrections hit the
        // c_{k-1} = c_1(Q) path. Here T = 0, so every route returns zero
        // while a0(X) itself is nonzero; the general composition has to
        // cancel exactly.
        for alpha in [-3i64, 1, 5] {
            let s = Scenario::new(
                Ambient::grassmannian(2, 4).unwrap(),
                anticanonical(),
                OnePs::sl(vec![-3, -1, 1, 3]).unwrap(),
                Family::Vector {
                    bundle: BundleExpr::new(BundleKind::Quotient),
                    copies: 1,
                    p: 1,
                    q: 4,
                },
                vec![rat_int(alpha)],
            )
            .unwrap();
            let compact = futaki_vector_family(&s).unwrap();
            let proportional = futaki_weight_multiple(&s).unwrap();
            let general = futaki_ci_general(&s).unwrap();
            assert_eq!(proportional.t_const, Some(rat_int(0)));
            assert_eq!(compact.futaki, rat_int(0));
            assert_eq!(proportional.futaki, rat_int(0));
            assert_eq!(general, rat_int(0));
            if alpha != 0 {
                assert!(!compact.a0.unwrap().is_zero());
            }
        }
    }

    #[test]
    fn general_composition_invariant_under_polarization_power() {
        // all polarizations on the ray give the same invariant
        for kind in [
            BundleKind::DetQuotientPower(1),
            BundleKind::DetQuotientPower(2),
            BundleKind::AntiCanonical,
        ] {
            let s = Scenario::new(
                Ambient::grassmannian(2, 5).unwrap(),
                BundleExpr::new(kind),
                OnePs::sl(vec![-2, -1, 0, 1, 2]).unwrap(),
                Family::Vector {
                    bundle: BundleExpr::new(BundleKind::ExteriorQuotient(3)),
                    copies: 3,
                    p: 1,
                    q: 5,
                },
                vec![rat_int(-3), rat_int(-2), rat_int(-1)],
            )
            .unwrap();
            assert_eq!(futaki_ci_general(&s).unwrap(), rat(3, 2));
        }
    }

    #[test]
    fn line_family_reduces_to_projective_form() {
        let lambda = vec![4, 1, -1, -4];
        for (rs, alphas) in [
            (vec![2], vec![rat_int(-4)]),
            (vec![2, 3], vec![rat_int(1), rat_int(-3)]),
        ] {
            let s = Scenario::projective_ci(3, lambda.clone(), rs.clone(), alphas.clone()).unwrap();
            assert_eq!(
                futaki_line_family(&s).unwrap(),
                futaki_projective_ci(3, &rs, &alphas).unwrap()
            );
        }
    }

    #[test]
    fn chow_weight_examples() {
        // generic degeneration data on G(2,5): mu = sum(alpha)/4
        let s = Scenario::new(
            Ambient::grassmannian(2, 5).unwrap(),
            BundleExpr::new(BundleKind::DetQuotientPower(1)),
            OnePs::sl(vec![-2, -1, 0, 1, 2]).unwrap(),
            Family::LinePowers { powers: vec![1, 1, 1] },
            vec![rat_int(-3), rat_int(-2), rat_int(-1)],
        )
        .unwrap();
        assert_eq!(chow_weight(&s).unwrap(), rat(-6, 4));

        // trivial weights
        let t = Scenario::new(
            Ambient::grassmannian(2, 5).unwrap(),
            BundleExpr::new(BundleKind::DetQuotientPower(1)),
            OnePs::sl(vec![-2, -1, 0, 1, 2]).unwrap(),
            Family::LinePowers { powers: vec![1, 1, 1] },
            vec![rat_int(0); 3],
        )
        .unwrap();
        assert_eq!(chow_weight(&t).unwrap(), rat_int(0));

        // trivial action: every weight coincides, the closed form still works
        let trivial = Scenario::new(
            Ambient::grassmannian(2, 5).unwrap(),
            BundleExpr::new(BundleKind::DetQuotientPower(1)),
            OnePs::sl(vec![0; 5]).unwrap(),
            Family::LinePowers { powers: vec![1, 1, 1] },
            vec![rat_int(0); 3],
        )
        .unwrap();
        assert_eq!(chow_weight(&trivial).unwrap(), rat_int(0));
    }

    #[test]
    fn chow_relation_constants() {
        // C = 0 exactly for (P^n, O(1), r = 1)
        let s = Scenario::projective_ci(3, vec![3, 1, -1, -3], vec![1], vec![rat_int(-3)]).unwrap();
        let report = futaki_chow_relation(&s).unwrap();
        assert_eq!(report.c_const, Some(rat_int(0)));
        assert_eq!(report.futaki, rat_int(0));

        // C = 1 on (G(2,5), det Q) with r = 1, so F = -mu = -sum(alpha)/4
        let s = Scenario::new(
            Ambient::grassmannian(2, 5).unwrap(),
            BundleExpr::new(BundleKind::DetQuotientPower(1)),
            OnePs::sl(vec![-2, -1, 0, 1, 2]).unwrap(),
            Family::LinePowers { powers: vec![1, 1, 1] },
            vec![rat_int(-3), rat_int(-2), rat_int(-1)],
        )
        .unwrap();
        let report = futaki_chow_relation(&s).unwrap();
        assert_eq!(report.c_const, Some(rat_int(1)));
        assert_eq!(report.futaki, rat(3, 2));
        assert!(report.checks.iter().any(|c| c.name == "c_nonnegative" && c.pass));
    }

    #[test]
    fn chow_relation_handles_repeated_weights() {
        let s = Scenario::new(
            Ambient::grassmannian(2, 5).unwrap(),
            BundleExpr::new(BundleKind::DetQuotientPower(1)),
            OnePs::sl(vec![-1, -1, -1, -1, 4]).unwrap(),
            Family::LinePowers { powers: vec![1, 1, 1] },
            vec![rat_int(-3), rat_int(-3), rat_int(-3)],
        )
        .unwrap();
        let report = futaki_chow_relation(&s).unwrap();
        assert_eq!(report.futaki, rat(9, 4));
    }

    #[test]
    fn ambient_futaki_vanishes_under_sl() {
        let s = Scenario::new(
            Ambient::grassmannian(2, 5).unwrap(),
            anticanonical(),
            OnePs::sl(vec![-7, -2, 1, 3, 5]).unwrap(),
            Family::LinePowers { powers: vec![] },
            vec![],
        )
        .unwrap();
        assert_eq!(ambient_futaki(&s).unwrap(), rat_int(0));
    }
}
