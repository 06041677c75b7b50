//! Named verification suites: randomized exact checks shared by the command
//! line front end and the acceptance tests. A suite runs a number of trials
//! and reports one line per check; any failed line carries the counterexample
//! that produced it.

use crate::chern::koszul_identity_residual;
use crate::error::Error;
use crate::futaki::{
    ambient_futaki, ambient_weight_coeffs, ci_dim_coeffs, ci_weight_coeffs, futaki_chow_relation,
    futaki_ci_general, futaki_from_expansions, futaki_line_family, futaki_projective_ci,
    futaki_vector_family, Family, Scenario,
};
use crate::grassmann::{pieri_degree, Ambient, BundleExpr, BundleKind, OnePs};
use crate::koszul::{oracle_expansion, oracle_futaki};
use crate::localization::{
    integrate, integrate_ordinary, integrate_sum, sl_vanishing, Factor, IntegrandMonomial,
};
use crate::sampling::{distinct_sl_weights, rat_nonzero};
use crate::{rat, rat_int, Rat, Result};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct SuiteLine {
    pub label: String,
    pub pass: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub lines: Vec<SuiteLine>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.to_string(), lines: Vec::new() }
    }

    fn check(&mut self, label: impl Into<String>, pass: bool, detail: Option<String>) {
        self.lines.push(SuiteLine { label: label.into(), pass, detail });
    }

    /// Records a checked computation; an error becomes a failing line.
    fn try_check(
        &mut self,
        label: impl Into<String>,
        run: impl FnOnce() -> Result<(bool, Option<String>)>,
    ) {
        match run() {
            Ok((pass, detail)) => self.check(label, pass, detail),
            Err(e) => self.check(label, false, Some(e.to_string())),
        }
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SuiteLine> {
        self.lines.iter().filter(|l| !l.pass)
    }
}

pub const SUITES: &[&str] = &["lemma51", "koszul", "localization", "invariance", "vanishing"];

/// Runs the named suite. Unknown names are invalid input.
pub fn run_suite(name: &str, trials: Option<usize>, seed: u64) -> Result<SuiteReport> {
    match name {
        "lemma51" => Ok(series_identity_suite(trials.unwrap_or(20), seed)),
        "koszul" => Ok(koszul_suite(trials.unwrap_or(25), seed)),
        "localization" => Ok(localization_suite(trials.unwrap_or(5), seed)),
        "invariance" => Ok(invariance_suite(trials.unwrap_or(3), seed)),
        "vanishing" => Ok(vanishing_suite(trials.unwrap_or(5), seed)),
        other => Err(Error::invalid(format!(
            "unknown suite {other:?}; available: {}",
            SUITES.join(", ")
        ))),
    }
}

/// The alternating-exterior-power Chern character identity: the residual
/// series must vanish identically at random nonzero rational roots.
pub fn series_identity_suite(trials: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("lemma51");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let len = rng.gen_range(1..=3usize);
        let ws: Vec<Rat> = (0..len).map(|_| rat_nonzero(&mut rng, 9, 4)).collect();
        let shown: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
        let label = format!("residual zero at roots [{}] [trial {t}]", shown.join(", "));
        report.try_check(label, || {
            let r = koszul_identity_residual(&ws, 8)?;
            Ok((r.is_zero(), (!r.is_zero()).then(|| format!("{r:?}"))))
        });
    }
    report
}

fn random_monomial_weight(rng: &mut impl Rng, n: usize, degree: i64, lambda: &[i64]) -> i64 {
    // exponent vector of a random monomial z^a with |a| = degree
    let mut alpha = 0;
    for _ in 0..degree {
        alpha -= lambda[rng.gen_range(0..=n)];
    }
    alpha
}

/// Oracle equivalence: interpolated expansion coefficients and invariants of
/// random projective intersections must match every closed form exactly.
pub fn koszul_suite(trials: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("koszul");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let n = rng.gen_range(2..=5usize);
        let s = rng.gen_range(1..=2usize.min(n - 1));
        let lambda = distinct_sl_weights(&mut rng, n + 1, 5);
        let rs: Vec<i64> = (0..s).map(|_| rng.gen_range(1..=3i64)).collect();
        let alphas: Vec<i64> = rs
            .iter()
            .map(|&r| random_monomial_weight(&mut rng, n, r, &lambda))
            .collect();
        let label = format!("n={n} rs={rs:?} alphas={alphas:?} lambda={lambda:?} [trial {t}]");

        report.try_check(format!("oracle coefficients match formulas: {label}"), || {
            let oracle = oracle_expansion(n, &lambda, &rs, &alphas, 1)?;
            let scenario = Scenario::projective_ci(
                n,
                lambda.clone(),
                rs.clone(),
                alphas.iter().map(|&a| rat_int(a)).collect(),
            )?;
            let (d0, d1) = ci_dim_coeffs(&scenario)?;
            let (a0, a1) = ci_weight_coeffs(&scenario)?;
            let ok = (oracle.d0.clone(), oracle.d1.clone()) == (d0, d1)
                && (oracle.a0.clone(), oracle.a1.clone()) == (a0, a1);
            Ok((ok, (!ok).then(|| format!("oracle {oracle:?}"))))
        });

        report.try_check(format!("invariant routes agree: {label}"), || {
            let alphas_rat: Vec<Rat> = alphas.iter().map(|&a| rat_int(a)).collect();
            let scenario = Scenario::projective_ci(n, lambda.clone(), rs.clone(), alphas_rat.clone())?;
            let by_oracle = oracle_futaki(n, &lambda, &rs, &alphas)?;
            let closed = futaki_projective_ci(n, &rs, &alphas_rat)?;
            let line = futaki_line_family(&scenario)?;
            let general = futaki_ci_general(&scenario)?;
            let ok = by_oracle == closed && closed == line && line == general;
            Ok((
                ok,
                (!ok).then(|| format!("oracle {by_oracle}, closed {closed}, line {line}, general {general}")),
            ))
        });
    }
    report
}

/// Structural localization checks: degree-deficient vanishing, linearity,
/// stability of ordinary integrals, and the Pieri degree oracle.
pub fn localization_suite(trials: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("localization");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let det = || BundleExpr::new(BundleKind::DetQuotientPower(1));
    let quot = || BundleExpr::new(BundleKind::Quotient);

    report.try_check("degree-deficient integral vanishes on G(2,4)", || {
        let g24 = Ambient::grassmannian(2, 4)?;
        let nu = OnePs::sl(distinct_sl_weights(&mut rng, 4, 9))?;
        let one = IntegrandMonomial::new(vec![]);
        let low = IntegrandMonomial::new(vec![Factor::equivariant(det(), 1, 2)]);
        let a = integrate(&g24, &one, &nu)?;
        let b = integrate(&g24, &low, &nu)?;
        Ok((a.is_zero() && b.is_zero(), Some(format!("{a}, {b}"))))
    });

    for t in 0..trials {
        report.try_check(format!("linearity over monomials [trial {t}]"), || {
            let g24 = Ambient::grassmannian(2, 4)?;
            let nu = OnePs::sl(distinct_sl_weights(&mut rng, 4, 9))?;
            let m1 = IntegrandMonomial::new(vec![Factor::equivariant(quot(), 2, 2)]);
            let m2 = IntegrandMonomial::new(vec![
                Factor::equivariant(quot(), 1, 2),
                Factor::equivariant(quot(), 2, 1),
            ]);
            let (c1, c2) = (rat_nonzero(&mut rng, 7, 3), rat_nonzero(&mut rng, 7, 3));
            let combined = integrate_sum(&g24, &[(c1.clone(), m1.clone()), (c2.clone(), m2.clone())], &nu)?;
            let split = c1 * integrate(&g24, &m1, &nu)? + c2 * integrate(&g24, &m2, &nu)?;
            Ok((combined == split, Some(format!("{combined} vs {split}"))))
        });
    }

    for (k, n_big) in [(1usize, 4usize), (2, 5), (2, 6)] {
        report.try_check(
            format!("top self-intersections match the Pieri oracle on G({k},{n_big})"),
            || {
                let ambient = Ambient::grassmannian(k, n_big)?;
                let m = IntegrandMonomial::new(vec![Factor::ordinary(det(), 1, ambient.dim())]);
                let by_fixed_points = integrate_ordinary(&ambient, &m)?;
                let by_pieri = rat_int(pieri_degree(k, n_big)? as i64);
                Ok((
                    by_fixed_points == by_pieri,
                    Some(format!("{by_fixed_points} vs {by_pieri}")),
                ))
            },
        );
    }

    report.try_check("ordinary integrals ignore linearization shifts", || {
        let g25 = Ambient::grassmannian(2, 5)?;
        let shifted = det().with_shift(rat(5, 7));
        let m = IntegrandMonomial::new(vec![Factor::equivariant(shifted, 1, g25.dim())]);
        let v = integrate_ordinary(&g25, &m)?;
        Ok((v == rat_int(5), Some(v.to_string())))
    });

    report
}

fn quintic_vector_scenario(shift: Rat) -> Result<Scenario> {
    // sections weights follow the shifted family linearization
    let e_shift = shift.clone() / rat_int(5);
    let alphas: Vec<Rat> = [-3, -2, -1]
        .iter()
        .map(|&a| rat_int(a) + e_shift.clone())
        .collect();
    Scenario::new(
        Ambient::grassmannian(2, 5)?,
        BundleExpr::shifted(BundleKind::AntiCanonical, shift),
        OnePs::sl(vec![-2, -1, 0, 1, 2])?,
        Family::Vector {
            bundle: BundleExpr::shifted(BundleKind::ExteriorQuotient(3), e_shift),
            copies: 3,
            p: 1,
            q: 5,
        },
        alphas,
    )
}

/// Linearization and tensor-power invariance, plus the homogeneous-ambient
/// vanishing of the invariant and of the leading weight coefficient.
pub fn invariance_suite(trials: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("invariance");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shifts = [rat_int(1), rat_int(-1), rat(1, 2)];

    // vector-family path: shift the polarization by c, the rank-one family
    // bundle by (p/q) c, and the section weights along with it
    report.try_check("vector-family formula under compatible shifts", || {
        let base = futaki_vector_family(&quintic_vector_scenario(Rat::zero())?)?.futaki;
        for c in &shifts {
            let shifted = futaki_vector_family(&quintic_vector_scenario(c.clone())?)?.futaki;
            if shifted != base {
                return Ok((false, Some(format!("shift {c}: {shifted} vs {base}"))));
            }
        }
        Ok((base == rat(3, 2), Some(base.to_string())))
    });

    // polarization-power path: the polarization shift must drop out
    report.try_check("power-family formulas under polarization shifts", || {
        let make = |c: Rat| -> Result<Scenario> {
            Scenario::new(
                Ambient::grassmannian(2, 5)?,
                BundleExpr::shifted(BundleKind::DetQuotientPower(1), c),
                OnePs::sl(vec![-2, -1, 0, 1, 2])?,
                Family::LinePowers { powers: vec![1, 1, 1] },
                vec![rat_int(-3), rat_int(-2), rat_int(-1)],
            )
        };
        let base_scenario = make(Rat::zero())?;
        let base = futaki_chow_relation(&base_scenario)?.futaki;
        let base_general = futaki_ci_general(&base_scenario)?;
        if base != base_general {
            return Ok((false, Some(format!("routes disagree: {base} vs {base_general}"))));
        }
        for c in &shifts {
            let scenario = make(c.clone())?;
            let chow = futaki_chow_relation(&scenario)?.futaki;
            let general = futaki_ci_general(&scenario)?;
            let line = futaki_line_family(&scenario)?;
            if chow != base || general != base || line != base {
                return Ok((
                    false,
                    Some(format!("shift {c}: chow {chow}, general {general}, line {line}")),
                ));
            }
        }
        Ok((true, Some(base.to_string())))
    });

    report.try_check("projective general path under polarization shifts", || {
        let make = |c: Rat| -> Result<Scenario> {
            let mut s =
                Scenario::projective_ci(3, vec![3, 1, -1, -3], vec![2], vec![rat_int(-6)])?;
            s.polarization = BundleExpr::shifted(BundleKind::LinePower(1), c);
            Ok(s)
        };
        let base = futaki_ci_general(&make(Rat::zero())?)?;
        for c in &shifts {
            let shifted = futaki_ci_general(&make(c.clone())?)?;
            if shifted != base {
                return Ok((false, Some(format!("shift {c}: {shifted} vs {base}"))));
            }
        }
        Ok((base == rat_int(2), Some(base.to_string())))
    });

    for t in 0..trials {
        report.try_check(format!("oracle invariant under polarization power [trial {t}]"), || {
            let n = rng.gen_range(2..=4usize);
            let lambda = distinct_sl_weights(&mut rng, n + 1, 5);
            let r = rng.gen_range(1..=3i64);
            let alpha = random_monomial_weight(&mut rng, n, r, &lambda);
            let once = futaki_from_expansions(&oracle_expansion(n, &lambda, &[r], &[alpha], 1)?)?;
            let twice = futaki_from_expansions(&oracle_expansion(n, &lambda, &[r], &[alpha], 2)?)?;
            Ok((once == twice, Some(format!("{once} vs {twice}"))))
        });
    }

    for (k, n_big) in [(2usize, 5usize), (4, 6)] {
        for t in 0..trials {
            report.try_check(
                format!("homogeneous ambient vanishing on G({k},{n_big}) [trial {t}]"),
                || {
                    let ambient = Ambient::grassmannian(k, n_big)?;
                    let nu = OnePs::sl(distinct_sl_weights(&mut rng, n_big, 9))?;
                    for kind in [BundleKind::AntiCanonical, BundleKind::DetQuotientPower(1)] {
                        let polarization = BundleExpr::new(kind);
                        let (a0, _) = ambient_weight_coeffs(&ambient, &polarization, &nu)?;
                        let scenario = Scenario::new(
                            ambient,
                            polarization,
                            nu.clone(),
                            Family::LinePowers { powers: vec![] },
                            vec![],
                        )?;
                        let f = ambient_futaki(&scenario)?;
                        if !a0.is_zero() || !f.is_zero() {
                            return Ok((false, Some(format!("a0 = {a0}, F = {f}"))));
                        }
                    }
                    Ok((true, None))
                },
            );
        }
    }

    report
}

/// The linearization vanishing hypothesis across the standard tuples.
pub fn vanishing_suite(trials: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("vanishing");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (k, n_big, l, d) in [(2usize, 5usize, 3usize, 3usize), (2, 4, 1, 1), (4, 6, 2, 3), (1, 4, 1, 2)] {
        for t in 0..trials {
            report.try_check(
                format!("vanishing at (k={k}, N={n_big}, l={l}, d={d}) [trial {t}]"),
                || {
                    let nu = OnePs::sl(distinct_sl_weights(&mut rng, n_big, 9))?;
                    let v = sl_vanishing(k, n_big, l, d, &nu)?;
                    Ok((v.is_zero(), Some(format!("{v} at {:?}", nu.weights()))))
                },
            );
        }
    }
    report
}
