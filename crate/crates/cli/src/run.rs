//! Drivers behind the subcommands: formula dispatch, verification suites and
//! search campaigns.

use crate::schema::{LoadedScenario, ReportFile, ScenarioFile};
use futaki_core::degeneration::{
    build_test_configuration, delpezzo_search, expected_rep, exterior_power_pipeline,
    generic_system, DelPezzoRow, PipelineRows,
};
use futaki_core::futaki::{
    ci_dim_coeffs, ci_weight_coeffs, futaki_chow_relation,
    futaki_from_expansions, futaki_line_family, futaki_vector_family, futaki_weight_multiple,
    Check, ExpansionCoeffs, Family, FutakiReport, Scenario,
};
use futaki_core::grassmann::OnePs;
use futaki_core::sampling::distinct_sl_weights;
use futaki_core::suites::{run_suite, SuiteReport};
use futaki_core::{Error, Rat};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    Auto,
    Thm31,
    Cor33,
    Thm41,
    Cor44,
    General,
    All,
}

impl Formula {
    pub fn parse(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "auto" => Formula::Auto,
            "thm31" => Formula::Thm31,
            "cor33" => Formula::Cor33,
            "thm41" => Formula::Thm41,
            "cor44" => Formula::Cor44,
            "general" => Formula::General,
            "all" => Formula::All,
            other => {
                return Err(Error::invalid(format!(
                    "unknown formula {other:?}; expected thm31|cor33|thm41|cor44|general|all|auto"
                )))
            }
        })
    }
}

fn general_report(scenario: &Scenario) -> Result<FutakiReport, Error> {
    let (a0, a1) = ci_weight_coeffs(scenario)?;
    let (d0, d1) = ci_dim_coeffs(scenario)?;
    let futaki = futaki_from_expansions(&ExpansionCoeffs {
        a0: a0.clone(),
        a1: a1.clone(),
        d0: d0.clone(),
        d1: d1.clone(),
    })?;
    let mut report = FutakiReport::new(futaki, scenario.alpha_sum());
    report.a0 = Some(a0);
    report.a1 = Some(a1);
    report.d0 = Some(d0);
    report.d1 = Some(d1);
    Ok(report)
}

fn line_report(scenario: &Scenario) -> Result<FutakiReport, Error> {
    let futaki = futaki_line_family(scenario)?;
    Ok(FutakiReport::new(futaki, scenario.alpha_sum()))
}

fn run_formula(scenario: &Scenario, formula: Formula) -> Result<FutakiReport, Error> {
    match formula {
        Formula::Thm31 => futaki_vector_family(scenario),
        Formula::Cor33 => futaki_weight_multiple(scenario),
        Formula::Thm41 => line_report(scenario),
        Formula::Cor44 => futaki_chow_relation(scenario),
        Formula::General => general_report(scenario),
        Formula::Auto => match &scenario.family {
            Family::Vector { .. } => futaki_vector_family(scenario),
            Family::LinePowers { powers } => {
                if !powers.is_empty() && powers.iter().all(|r| *r == powers[0]) {
                    futaki_chow_relation(scenario)
                } else {
                    line_report(scenario)
                }
            }
        },
        Formula::All => run_all_formulas(scenario),
    }
}

/// Runs every formula applicable to the family, requires the successful ones
/// to agree exactly, and merges their diagnostics. A constituent that refuses
/// is recorded as a failed check rather than aborting the run.
fn run_all_formulas(scenario: &Scenario) -> Result<FutakiReport, Error> {
    let candidates: Vec<(&str, Formula)> = match &scenario.family {
        Family::Vector { .. } => vec![
            ("thm31", Formula::Thm31),
            ("cor33", Formula::Cor33),
            ("general", Formula::General),
        ],
        Family::LinePowers { .. } => vec![
            ("cor44", Formula::Cor44),
            ("thm41", Formula::Thm41),
            ("general", Formula::General),
        ],
    };

    let mut merged: Option<FutakiReport> = None;
    let mut extra_checks: Vec<Check> = Vec::new();
    let mut first_error: Option<Error> = None;
    for (name, formula) in candidates {
        if formula == Formula::Cor44 {
            if let Family::LinePowers { powers } = &scenario.family {
                if powers.is_empty() || powers.iter().any(|r| *r != powers[0]) {
                    continue;
                }
            }
        }
        if formula == Formula::General && !scenario.one_ps.is_distinct() {
            continue;
        }
        match run_formula(scenario, formula) {
            Ok(report) => match &mut merged {
                None => merged = Some(report),
                Some(base) => {
                    if base.futaki != report.futaki {
                        return Err(Error::Inconsistent(format!(
                            "formula {name} gives {} but an earlier formula gave {}",
                            report.futaki, base.futaki
                        )));
                    }
                    base.a0 = base.a0.take().or(report.a0);
                    base.a1 = base.a1.take().or(report.a1);
                    base.d0 = base.d0.take().or(report.d0);
                    base.d1 = base.d1.take().or(report.d1);
                    base.c_const = base.c_const.take().or(report.c_const);
                    base.t_const = base.t_const.take().or(report.t_const);
                    base.t_bound = base.t_bound.take().or(report.t_bound);
                    base.mu = base.mu.take().or(report.mu);
                    base.fano = base.fano.take().or(report.fano);
                    for check in report.checks {
                        if !base.checks.iter().any(|c| c.name == check.name) {
                            base.checks.push(check);
                        }
                    }
                    extra_checks.push(Check::new(&format!("{name}_agrees"), true, None));
                }
            },
            Err(e @ (Error::Refused { .. } | Error::NonGenericWeights(_))) => {
                extra_checks.push(Check::new(
                    &format!("{name}_refused"),
                    false,
                    None,
                ));
                if first_error.is_none() {
                    first_error = Some(e);
                }
            }
            Err(e) => return Err(e),
        }
    }
    match merged {
        Some(mut report) => {
            report.checks.extend(extra_checks);
            Ok(report)
        }
        None => Err(first_error.unwrap_or_else(|| Error::invalid("no applicable formula"))),
    }
}

/// Full compute pipeline for a parsed scenario file.
pub fn compute(file: ScenarioFile, formula: Formula, degenerate: bool) -> Result<ReportFile, Error> {
    let LoadedScenario { mut scenario, generic_request } = file.into_scenario()?;

    let mut is_product = None;
    if degenerate {
        if let Some((dim, seed)) = generic_request {
            let (big_n, l) = expected_rep(&scenario)?;
            scenario.sections = Some(generic_system(big_n, l, dim, &scenario.one_ps, seed)?);
        }
        let (central, product) = build_test_configuration(&scenario)?;
        scenario = central;
        is_product = Some(product);
    } else if generic_request.is_some() {
        return Err(Error::invalid(
            "generic sections only define weights through their flat limit; pass --degenerate",
        ));
    } else if let Some(system) = &scenario.sections {
        // explicit sections without degeneration must already be semi-invariant
        let weights = system.basis_weights(&scenario.one_ps).map_err(|_| {
            Error::invalid(
                "explicit sections are not semi-invariant; pass --degenerate to take the flat limit",
            )
        })?;
        scenario.section_weights = weights.into_iter().map(|w| Rat::from_integer(w.into())).collect();
    }

    let mut report = run_formula(&scenario, formula)?;
    report.is_product = is_product;
    Ok(ReportFile::from_report(&report, Some(&scenario.section_weights)))
}

/// Runs a verification suite.
pub fn verify(suite: &str, trials: Option<usize>, seed: u64) -> Result<SuiteReport, Error> {
    run_suite(suite, trials, seed)
}

pub enum SearchOutcome {
    Delpezzo(Vec<DelPezzoRow>),
    ExteriorPower(Vec<(Vec<i64>, FutakiReport)>),
}

/// Quintic Del Pezzo campaign.
pub fn search_delpezzo(
    bound: i64,
    pipeline_samples: Option<usize>,
    seed: u64,
) -> Result<SearchOutcome, Error> {
    let rows = delpezzo_search(
        bound,
        pipeline_samples.map_or(PipelineRows::All, PipelineRows::Sample),
        seed,
    )?;
    Ok(SearchOutcome::Delpezzo(rows))
}

/// Exterior-power campaign: `samples` random nontrivial distinct trace-zero
/// weight vectors, one pipeline run each.
pub fn search_exterior_power(
    k: usize,
    big_n: usize,
    ell: usize,
    d: usize,
    samples: usize,
    seed: u64,
) -> Result<SearchOutcome, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(samples);
    for i in 0..samples {
        let nu = OnePs::sl(distinct_sl_weights(&mut rng, big_n, 9))?;
        let report = exterior_power_pipeline(k, big_n, ell, d, &nu, seed.wrapping_add(i as u64))?;
        rows.push((nu.weights().to_vec(), report));
    }
    Ok(SearchOutcome::ExteriorPower(rows))
}
