//! One-parameter-subgroup degenerations of linear systems inside the
//! exterior-power representation `wedge^l C^N`: flat limits as spans of
//! initial forms, Mumford weights, the induced test configurations, the
//! quintic Del Pezzo search and the general Grassmannian intersection
//! pipeline.
//!
//! Limit convention: the subgroup scales a weight-`a` vector by `t^a` and the
//! limit is taken as `t -> 0`, so the initial form of a vector is its
//! minimal-weight homogeneous part.

use crate::error::Error;
use crate::futaki::{
    futaki_chow_relation, futaki_weight_multiple, Check, Family, FutakiReport, Scenario,
};
use crate::grassmann::{Ambient, BundleExpr, BundleKind, OnePs};
use crate::linalg::{dependency, rank, same_span};
use crate::localization::sl_vanishing;
use crate::{binomial, rat, rat_int, Rat, Result};
use itertools::Itertools;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// All l-subsets of `{1, ..., N}` in lexicographic order; this is the
/// coordinate order of every linear system in the representation.
pub fn rep_basis(big_n: usize, l: usize) -> Vec<Vec<usize>> {
    (1..=big_n).combinations(l).collect()
}

/// Weight of each basis vector `e_T`: the direct action gives
/// `weight(e_T) = sum_{i in T} nu_i`.
pub fn rep_basis_weights(big_n: usize, l: usize, one_ps: &OnePs) -> BTreeMap<Vec<usize>, i64> {
    rep_basis(big_n, l)
        .into_iter()
        .map(|t| {
            let w = t.iter().map(|&i| one_ps.weights()[i - 1]).sum();
            (t, w)
        })
        .collect()
}

fn coordinate_weights(big_n: usize, l: usize, one_ps: &OnePs) -> Vec<i64> {
    rep_basis(big_n, l)
        .iter()
        .map(|t| t.iter().map(|&i| one_ps.weights()[i - 1]).sum())
        .collect()
}

/// A subspace of `wedge^l C^N`, given by independent coordinate vectors over
/// the lexicographic subset basis.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearSystem {
    big_n: usize,
    l: usize,
    basis: Vec<Vec<Rat>>,
}

impl LinearSystem {
    pub fn new(big_n: usize, l: usize, basis: Vec<Vec<Rat>>) -> Result<Self> {
        if l == 0 || l > big_n {
            return Err(Error::invalid(format!("exterior power {l} outside 1..={big_n}")));
        }
        let ncoords = binomial(big_n, l) as usize;
        if basis.is_empty() {
            return Err(Error::invalid("a linear system needs at least one section"));
        }
        for v in &basis {
            if v.len() != ncoords {
                return Err(Error::invalid(format!(
                    "section vector has {} coordinates, representation has {ncoords}",
                    v.len()
                )));
            }
        }
        if rank(&basis) != basis.len() {
            return Err(Error::invalid("section vectors are linearly dependent"));
        }
        Ok(LinearSystem { big_n, l, basis })
    }

    /// Builds the basis from sparse `(subset, coefficient)` terms.
    pub fn from_terms(big_n: usize, l: usize, sections: &[Vec<(Vec<usize>, Rat)>]) -> Result<Self> {
        let subsets = rep_basis(big_n, l);
        let index: BTreeMap<&[usize], usize> = subsets
            .iter()
            .enumerate()
            .map(|(i, t)| (t.as_slice(), i))
            .collect();
        let mut basis = Vec::with_capacity(sections.len());
        for terms in sections {
            let mut v = vec![Rat::zero(); subsets.len()];
            for (t, coeff) in terms {
                let mut key = t.clone();
                key.sort_unstable();
                key.dedup();
                if key.len() != t.len() {
                    return Err(Error::invalid(format!("repeated index in subset {t:?}")));
                }
                let Some(&i) = index.get(key.as_slice()) else {
                    return Err(Error::invalid(format!(
                        "subset {t:?} is not an {l}-subset of 1..={big_n}"
                    )));
                };
                v[i] += coeff.clone();
            }
            basis.push(v);
        }
        LinearSystem::new(big_n, l, basis)
    }

    pub fn big_n(&self) -> usize {
        self.big_n
    }

    pub fn exterior_power(&self) -> usize {
        self.l
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    /// Weight of each basis vector when homogeneous.
    pub fn basis_weights(&self, one_ps: &OnePs) -> Result<Vec<i64>> {
        let weights = coordinate_weights(self.big_n, self.l, one_ps);
        self.basis
            .iter()
            .map(|v| {
                homogeneous_weight(v, &weights).ok_or_else(|| {
                    Error::invalid(
                        "basis vector is not weight-homogeneous; take the flat limit first",
                    )
                })
            })
            .collect()
    }

    pub fn same_subspace(&self, other: &LinearSystem) -> bool {
        self.big_n == other.big_n && self.l == other.l && same_span(&self.basis, &other.basis)
    }
}

fn homogeneous_weight(v: &[Rat], weights: &[i64]) -> Option<i64> {
    let mut seen: Option<i64> = None;
    for (coeff, &w) in v.iter().zip(weights) {
        if coeff.is_zero() {
            continue;
        }
        match seen {
            None => seen = Some(w),
            Some(prev) if prev == w => {}
            Some(_) => return None,
        }
    }
    seen
}

fn min_weight(v: &[Rat], weights: &[i64]) -> i64 {
    v.iter()
        .zip(weights)
        .filter(|(c, _)| !c.is_zero())
        .map(|(_, &w)| w)
        .min()
        .expect("nonzero vector")
}

fn initial_form(v: &[Rat], weights: &[i64]) -> Vec<Rat> {
    let m = min_weight(v, weights);
    v.iter()
        .zip(weights)
        .map(|(c, &w)| if w == m { c.clone() } else { Rat::zero() })
        .collect()
}

/// Flat limit of the system under the subgroup: the span of initial forms of
/// all its vectors, computed by iterated weight echelonization. When the
/// initial forms of the current basis are dependent, a dependency is
/// cancelled by a basis change that strictly raises one minimal weight, so
/// the loop terminates; the output basis is weight-homogeneous and spans a
/// subspace of the same dimension.
pub fn flat_limit(system: &LinearSystem, one_ps: &OnePs) -> Result<LinearSystem> {
    if one_ps.len() != system.big_n {
        return Err(Error::invalid(format!(
            "one-parameter subgroup has {} weights, representation needs {}",
            one_ps.len(),
            system.big_n
        )));
    }
    let weights = coordinate_weights(system.big_n, system.l, one_ps);
    let mut basis = system.basis.clone();
    loop {
        let inits: Vec<Vec<Rat>> = basis.iter().map(|v| initial_form(v, &weights)).collect();
        let Some(dep) = dependency(&inits) else {
            return LinearSystem::new(system.big_n, system.l, inits);
        };
        // the dependency restricted to the lowest weight level is itself a
        // dependency of homogeneous forms, and cancelling it raises that level
        let involved: Vec<usize> = (0..basis.len()).filter(|&i| !dep[i].is_zero()).collect();
        let low = involved
            .iter()
            .map(|&i| min_weight(&basis[i], &weights))
            .min()
            .expect("nonempty dependency");
        let level: Vec<usize> = involved
            .into_iter()
            .filter(|&i| min_weight(&basis[i], &weights) == low)
            .collect();
        let target = *level.last().expect("nonempty level");
        let ncoords = weights.len();
        let mut replacement = vec![Rat::zero(); ncoords];
        for &i in &level {
            for c in 0..ncoords {
                replacement[c] += dep[i].clone() * basis[i][c].clone();
            }
        }
        debug_assert!(replacement.iter().any(|c| !c.is_zero()));
        debug_assert!(min_weight(&replacement, &weights) > low);
        basis[target] = replacement;
    }
}

/// Sum of the weights of a weight-homogeneous basis.
pub fn mumford_weight(system: &LinearSystem, one_ps: &OnePs) -> Result<i64> {
    Ok(system.basis_weights(one_ps)?.iter().sum())
}

/// Central fiber of the test configuration induced by the subgroup acting on
/// the scenario's explicit linear system: the returned scenario carries the
/// flat limit and its weights, and the flag tells whether the configuration
/// is a product (the limit equals the original subspace).
pub fn build_test_configuration(scenario: &Scenario) -> Result<(Scenario, bool)> {
    let Some(system) = &scenario.sections else {
        return Err(Error::invalid("scenario carries no explicit sections"));
    };
    validate_section_rep(scenario, system)?;
    let limit = flat_limit(system, &scenario.one_ps)?;
    let weights = limit.basis_weights(&scenario.one_ps)?;
    let is_product = limit.same_subspace(system);
    let mut central = scenario.clone();
    central.section_weights = weights.into_iter().map(rat_int).collect();
    central.sections = Some(limit);
    Ok((central, is_product))
}

/// The exterior power in which the scenario's sections must live.
pub fn expected_rep(scenario: &Scenario) -> Result<(usize, usize)> {
    let (k, big_n) = scenario.ambient.plane_params();
    match &scenario.family {
        Family::Vector { bundle, .. } => match bundle.kind {
            BundleKind::ExteriorQuotient(l) => Ok((big_n, l)),
            BundleKind::DetQuotientPower(1) => Ok((big_n, big_n - k)),
            _ => Err(Error::invalid(
                "explicit sections are only modeled for exterior powers of the quotient",
            )),
        },
        Family::LinePowers { powers } => {
            let plucker = matches!(scenario.polarization.kind, BundleKind::DetQuotientPower(1));
            if powers.iter().all(|&r| r == 1) && plucker {
                Ok((big_n, big_n - k))
            } else {
                Err(Error::invalid(
                    "explicit sections need degree-one sections of the Plücker polarization",
                ))
            }
        }
    }
}

fn validate_section_rep(scenario: &Scenario, system: &LinearSystem) -> Result<()> {
    let (big_n, l) = expected_rep(scenario)?;
    if system.big_n() != big_n || system.exterior_power() != l {
        return Err(Error::invalid(format!(
            "sections live in wedge^{} C^{}, scenario needs wedge^{l} C^{big_n}",
            system.exterior_power(),
            system.big_n()
        )));
    }
    if system.dim() != scenario.family.section_count() {
        return Err(Error::invalid(format!(
            "{} sections for a family of {}",
            system.dim(),
            scenario.family.section_count()
        )));
    }
    Ok(())
}

/// Seeded generic d-dimensional subspace in echelon position with respect to
/// the weight-sorted semi-invariant basis: the i-th section is supported on
/// basis vectors of index >= i (in weight order) with a nonzero pivot.
/// A vanishing sampled pivot is reported for resampling.
pub fn generic_system(
    big_n: usize,
    l: usize,
    dim: usize,
    one_ps: &OnePs,
    seed: u64,
) -> Result<LinearSystem> {
    let weights = coordinate_weights(big_n, l, one_ps);
    let h = weights.len();
    if dim == 0 || dim > h {
        return Err(Error::invalid(format!("dimension {dim} outside 1..={h}")));
    }
    // stable weight-ascending order of the semi-invariant basis
    let mut order: Vec<usize> = (0..h).collect();
    order.sort_by_key(|&i| weights[i]);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut basis = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut v = vec![Rat::zero(); h];
        let pivot = rng.gen_range(-5i64..=5);
        if pivot == 0 {
            return Err(Error::NonGenericSeed(format!(
                "sampled echelon pivot {i} vanished"
            )));
        }
        v[order[i]] = rat_int(pivot);
        for &pos in &order[i + 1..] {
            v[pos] = rat_int(rng.gen_range(-5i64..=5));
        }
        basis.push(v);
    }
    LinearSystem::new(big_n, l, basis)
}

fn generic_system_resampling(
    big_n: usize,
    l: usize,
    dim: usize,
    one_ps: &OnePs,
    seed: u64,
) -> Result<LinearSystem> {
    let mut last = None;
    for attempt in 0..32 {
        match generic_system(big_n, l, dim, one_ps, seed.wrapping_add(attempt)) {
            Err(Error::NonGenericSeed(msg)) => last = Some(msg),
            other => return other,
        }
    }
    Err(Error::NonGenericSeed(last.unwrap_or_default()))
}

/// One row of the quintic Del Pezzo search table.
#[derive(Debug, Clone)]
pub struct DelPezzoRow {
    pub nu: [i64; 5],
    pub alpha_sum: i64,
    pub futaki_closed: Rat,
    pub futaki_pipeline: Option<Rat>,
}

impl DelPezzoRow {
    pub fn agrees(&self) -> Option<bool> {
        self.futaki_pipeline.as_ref().map(|f| *f == self.futaki_closed)
    }
}

/// Which rows of a search run the full degeneration pipeline.
#[derive(Debug, Clone, Copy)]
pub enum PipelineRows {
    All,
    Sample(usize),
}

/// Closed-form section weights of the limit of a generic three-plane in
/// `wedge^3 C^5` for sorted weights `nu_1 <= ... <= nu_5`.
pub fn delpezzo_alphas(nu: &[i64; 5]) -> [i64; 3] {
    [
        nu[0] + nu[1] + nu[2],
        nu[0] + nu[1] + nu[3],
        (nu[0] + nu[2] + nu[3]).min(nu[0] + nu[1] + nu[4]),
    ]
}

/// Degenerations of the generic codimension-three linear section of `G(2,5)`:
/// enumerates every sorted nontrivial trace-zero weight vector with entries
/// bounded by `bound`, evaluates the closed form `F = -1/4 sum alpha`, and on
/// the selected rows also runs the seeded-generic-subspace pipeline through
/// the flat limit and the Chow-weight formula. The closed form and the
/// pipeline must agree exactly and be positive on every row.
pub fn delpezzo_search(bound: i64, pipeline: PipelineRows, seed: u64) -> Result<Vec<DelPezzoRow>> {
    if bound < 1 {
        return Ok(Vec::new());
    }
    let mut tuples: Vec<[i64; 5]> = Vec::new();
    for a in -bound..=bound {
        for b in a..=bound {
            for c in b..=bound {
                for d in c..=bound {
                    let e = -(a + b + c + d);
                    if e >= d && e <= bound && !(a == 0 && e == 0) {
                        tuples.push([a, b, c, d, e]);
                    }
                }
            }
        }
    }

    let selected: Vec<bool> = match pipeline {
        PipelineRows::All => vec![true; tuples.len()],
        PipelineRows::Sample(count) => {
            let mut mask = vec![false; tuples.len()];
            if count >= tuples.len() {
                mask.iter_mut().for_each(|m| *m = true);
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut chosen = std::collections::HashSet::new();
                while chosen.len() < count {
                    chosen.insert(rng.gen_range(0..tuples.len()));
                }
                for i in chosen {
                    mask[i] = true;
                }
            }
            mask
        }
    };

    let mut rows = Vec::with_capacity(tuples.len());
    for (idx, nu) in tuples.into_iter().enumerate() {
        let alphas = delpezzo_alphas(&nu);
        let alpha_sum: i64 = alphas.iter().sum();
        let futaki_closed = rat(-alpha_sum, 4);

        let futaki_pipeline = if selected[idx] {
            Some(delpezzo_pipeline(&nu, seed.wrapping_add(idx as u64))?)
        } else {
            None
        };

        let row = DelPezzoRow { nu, alpha_sum, futaki_closed, futaki_pipeline };
        if let Some(false) = row.agrees() {
            return Err(Error::Inconsistent(format!(
                "pipeline disagrees with the closed form at nu = {:?}: {} vs {}",
                row.nu,
                row.futaki_pipeline.as_ref().unwrap(),
                row.futaki_closed
            )));
        }
        if !row.futaki_closed.is_positive() {
            return Err(Error::Inconsistent(format!(
                "nonpositive invariant {} at nontrivial nu = {:?}",
                row.futaki_closed, row.nu
            )));
        }
        rows.push(row);
    }
    Ok(rows)
}

fn delpezzo_pipeline(nu: &[i64; 5], seed: u64) -> Result<Rat> {
    let one_ps = OnePs::sl(nu.to_vec())?;
    let system = generic_system_resampling(5, 3, 3, &one_ps, seed)?;
    let mut scenario = Scenario::new(
        Ambient::grassmannian(2, 5)?,
        BundleExpr::new(BundleKind::DetQuotientPower(1)),
        one_ps,
        Family::LinePowers { powers: vec![1, 1, 1] },
        vec![Rat::zero(); 3],
    )?;
    scenario.sections = Some(system);
    let (central, _) = build_test_configuration(&scenario)?;
    Ok(futaki_chow_relation(&central)?.futaki)
}

/// Generic degeneration pipeline for `d`-dimensional systems of sections of
/// `wedge^l Q` on `G(k, N)`: builds the seeded generic subspace, takes its
/// flat limit, checks the Fano criterion `N - d C(N-k, l) > 0` and the
/// linearization vanishing hypothesis, and evaluates the weight-proportional
/// formula. The invariant must be positive whenever the Fano criterion holds.
pub fn exterior_power_pipeline(
    k: usize,
    big_n: usize,
    l: usize,
    d: usize,
    one_ps: &OnePs,
    seed: u64,
) -> Result<FutakiReport> {
    let ambient = Ambient::grassmannian(k, big_n)?;
    if !one_ps.is_sl() || !one_ps.is_nontrivial() {
        return Err(Error::invalid("the pipeline needs a nontrivial trace-zero subgroup"));
    }
    if !one_ps.is_distinct() {
        return Err(Error::NonGenericWeights(
            "the pipeline needs pairwise distinct weights".into(),
        ));
    }
    let e_rank = binomial(big_n - k, l) as usize;
    if e_rank == 0 {
        return Err(Error::invalid(format!(
            "exterior power {l} outside 1..={}",
            big_n - k
        )));
    }
    let dim_x = ambient.dim() as i64 - (d * e_rank) as i64;
    if dim_x <= 0 {
        return Err(Error::invalid(format!(
            "expected intersection dimension {dim_x} is not positive"
        )));
    }

    let system = generic_system_resampling(big_n, l, d, one_ps, seed)?;
    let limit = flat_limit(&system, one_ps)?;
    let alphas = limit.basis_weights(one_ps)?;
    let alpha_sum: i64 = alphas.iter().sum();

    let fano = big_n as i64 - (d * e_rank) as i64 > 0;
    let vanishing = sl_vanishing(k, big_n, l, d, one_ps)?;
    if !vanishing.is_zero() {
        return Err(Error::Refused {
            check: "hypothesis_vanishing".into(),
            diagnostic: format!("vanishing integral = {vanishing}"),
        });
    }

    // det(wedge^l Q) = (det Q)^C(N-k-1, l-1) pins the compatibility exponents
    let p = binomial(big_n - k - 1, l - 1) as i64;
    let scenario = Scenario::new(
        ambient,
        BundleExpr::new(BundleKind::AntiCanonical),
        one_ps.clone(),
        Family::Vector {
            bundle: BundleExpr::new(BundleKind::ExteriorQuotient(l)),
            copies: d,
            p,
            q: big_n as i64,
        },
        alphas.iter().map(|&a| rat_int(a)).collect(),
    )?;
    let mut report = futaki_weight_multiple(&scenario)?;
    report.fano = Some(fano);
    report.checks.push(Check::new(
        "fano_criterion",
        fano,
        Some(rat_int(big_n as i64 - (d * e_rank) as i64)),
    ));
    report.checks.push(Check::new(
        "mumford_weight_negative",
        alpha_sum < 0,
        Some(rat_int(alpha_sum)),
    ));

    if alpha_sum >= 0 {
        return Err(Error::Inconsistent(format!(
            "generic limit has nonnegative Mumford weight {alpha_sum} for nontrivial weights {:?}",
            one_ps.weights()
        )));
    }
    if fano && !report.futaki.is_positive() {
        return Err(Error::Inconsistent(format!(
            "Fano case produced nonpositive invariant {}",
            report.futaki
        )));
    }
    Ok(report)
}
