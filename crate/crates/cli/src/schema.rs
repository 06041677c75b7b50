//! Scenario and report documents. All rationals travel as exact strings
//! ("p/q", or just "p" for integers); reports round-trip byte for byte.

use futaki_core::degeneration::{expected_rep, LinearSystem};
use futaki_core::futaki::{Family, FutakiReport, Scenario};
use futaki_core::grassmann::{Ambient, BundleExpr, BundleKind, OnePs};
use futaki_core::{Error, Rat};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub ambient: AmbientFile,
    pub polarization: PolarizationFile,
    pub one_ps: OnePsFile,
    pub bundle: BundleFile,
    pub sections: SectionsFile,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", deny_unknown_fields)]
pub enum AmbientFile {
    #[serde(rename = "grassmannian")]
    Grassmannian { k: usize, #[serde(rename = "N")] n_big: usize },
    #[serde(rename = "projective")]
    Projective { n: usize },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolarizationFile {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default = "default_power")]
    pub value: i64,
}

fn default_power() -> i64 {
    1
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OnePsFile {
    pub weights: Vec<i64>,
    pub sl: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", deny_unknown_fields)]
pub enum BundleFile {
    #[serde(rename = "exterior_quotient")]
    ExteriorQuotient { ell: usize, copies: usize, p: i64, q: i64 },
    #[serde(rename = "line_powers")]
    LinePowers { powers: Vec<i64> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SectionsFile {
    /// Explicit semi-invariant or degenerating sections.
    Explicit(Vec<SectionFile>),
    /// Seeded generic subspace of the given dimension.
    Generic {
        #[serde(rename = "type")]
        kind: String,
        dim: usize,
        seed: u64,
    },
    /// Only the section weights, for closed-form evaluation.
    Weights { weights: Vec<i64> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionFile {
    pub terms: Vec<TermFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub indices: Vec<usize>,
    pub coeff: String,
}

pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| Error::invalid(format!("bad rational {s:?}: {e}")))
}

pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

/// The parsed scenario: the core data plus how sections were supplied.
pub struct LoadedScenario {
    pub scenario: Scenario,
    pub generic_request: Option<(usize, u64)>,
}

type SparseSections = Vec<Vec<(Vec<usize>, Rat)>>;

impl ScenarioFile {
    pub fn into_scenario(self) -> Result<LoadedScenario, Error> {
        let ambient = match self.ambient {
            AmbientFile::Grassmannian { k, n_big } => Ambient::grassmannian(k, n_big)?,
            AmbientFile::Projective { n } => Ambient::projective(n)?,
        };
        let polarization = match self.polarization.kind.as_str() {
            "anticanonical" => {
                if self.polarization.value != 1 {
                    return Err(Error::invalid("anticanonical polarization takes no power"));
                }
                BundleExpr::new(BundleKind::AntiCanonical)
            }
            "det_quotient_power" => {
                BundleExpr::new(BundleKind::DetQuotientPower(self.polarization.value))
            }
            "line_power" => BundleExpr::new(BundleKind::LinePower(self.polarization.value)),
            other => return Err(Error::invalid(format!("unknown polarization type {other:?}"))),
        };
        let one_ps = OnePs::new(self.one_ps.weights, self.one_ps.sl)?;
        let family = match self.bundle {
            BundleFile::ExteriorQuotient { ell, copies, p, q } => Family::Vector {
                bundle: BundleExpr::new(BundleKind::ExteriorQuotient(ell)),
                copies,
                p,
                q,
            },
            BundleFile::LinePowers { powers } => Family::LinePowers { powers },
        };
        let count = family.section_count();

        let mut generic_request = None;
        let (weights, sections) = match self.sections {
            SectionsFile::Weights { weights } => {
                if weights.len() != count {
                    return Err(Error::invalid(format!(
                        "{} section weights for {count} sections",
                        weights.len()
                    )));
                }
                (weights.into_iter().map(|w| Rat::from_integer(w.into())).collect(), None)
            }
            SectionsFile::Explicit(files) => {
                let parsed: Result<SparseSections, Error> = files
                    .iter()
                    .map(|sec| {
                        sec.terms
                            .iter()
                            .map(|t| Ok((t.indices.clone(), parse_rat(&t.coeff)?)))
                            .collect()
                    })
                    .collect();
                (vec![Rat::from_integer(0.into()); count], Some(parsed?))
            }
            SectionsFile::Generic { kind, dim, seed } => {
                if kind != "generic" {
                    return Err(Error::invalid(format!("unknown sections type {kind:?}")));
                }
                if dim != count {
                    return Err(Error::invalid(format!(
                        "generic dimension {dim} differs from the family's {count} sections"
                    )));
                }
                generic_request = Some((dim, seed));
                (vec![Rat::from_integer(0.into()); count], None)
            }
        };

        let mut scenario = Scenario::new(ambient, polarization, one_ps, family, weights)?;
        if let Some(parsed) = sections {
            let (big_n, l) = expected_rep(&scenario)?;
            scenario.sections = Some(LinearSystem::from_terms(big_n, l, &parsed)?);
        }
        Ok(LoadedScenario { scenario, generic_request })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    #[serde(rename = "F")]
    pub futaki: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a0: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a1: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d0: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d1: Option<String>,
    #[serde(rename = "C", skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    #[serde(rename = "T", skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    pub alpha_sum: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fano: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_product: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub section_weights: Option<Vec<String>>,
    pub checks: Vec<CheckFile>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckFile {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

impl ReportFile {
    pub fn from_report(report: &FutakiReport, section_weights: Option<&[Rat]>) -> Self {
        ReportFile {
            futaki: fmt_rat(&report.futaki),
            a0: report.a0.as_ref().map(fmt_rat),
            a1: report.a1.as_ref().map(fmt_rat),
            d0: report.d0.as_ref().map(fmt_rat),
            d1: report.d1.as_ref().map(fmt_rat),
            c: report.c_const.as_ref().map(fmt_rat),
            t: report.t_const.as_ref().map(fmt_rat),
            mu: report.mu.as_ref().map(fmt_rat),
            alpha_sum: fmt_rat(&report.alpha_sum),
            fano: report.fano,
            is_product: report.is_product,
            section_weights: section_weights.map(|ws| ws.iter().map(fmt_rat).collect()),
            checks: report
                .checks
                .iter()
                .map(|c| CheckFile {
                    name: c.name.clone(),
                    pass: c.pass,
                    value: c.value.as_ref().map(fmt_rat),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
