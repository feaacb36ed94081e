//! Job documents, orchestration and report rendering.
//!
//! A job is a single JSON object naming either a complete-intersection
//! presentation (`"weights"`, `"relations"`) or a Pfaffian one
//! (`"pfaffian"`), plus the divisor degree, the asserted hypotheses, the
//! table depth `max_m` and the truncation policy. Running a job produces a
//! [`SingularityReport`]; rendering is either a plaintext table or a
//! canonical JSON document whose integers are exact decimals.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::ser::Error as _;
use serde::{Deserialize, Serialize, Serializer};

use crate::classify::{self, Verdict};
use crate::error::{Error, Result};
use crate::kodaira::{self, KodairaReport};
use crate::plurigenera::{self, PlurigeneraRow};
use crate::ring::{DualizingShift, GradedRing, Hypotheses, PfaffianInput, WeightedCI};
use crate::series::FactoredHilbert;

/// Serialize a [`BigInt`] as a JSON number in decimal, with no precision
/// loss (serde_json is built with `arbitrary_precision`).
pub(crate) fn serialize_bigint<S: Serializer>(
    x: &BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    serde_json::Number::from_str(&x.to_string())
        .map_err(S::Error::custom)?
        .serialize(s)
}

/// How far to expand the Hilbert series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TruncationPolicy {
    /// The maximum coefficient index any enabled analysis needs, plus one.
    Auto,
    Fixed(u64),
}

impl Serialize for TruncationPolicy {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            TruncationPolicy::Auto => s.serialize_str("auto"),
            TruncationPolicy::Fixed(t) => s.serialize_u64(*t),
        }
    }
}

impl<'de> Deserialize<'de> for TruncationPolicy {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = TruncationPolicy;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                write!(f, "\"auto\" or a non-negative integer")
            }
            fn visit_str<E: serde::de::Error>(
                self,
                v: &str,
            ) -> std::result::Result<Self::Value, E> {
                if v == "auto" {
                    Ok(TruncationPolicy::Auto)
                } else {
                    Err(E::custom(format!(
                        "truncation must be \"auto\" or an integer, got \"{v}\""
                    )))
                }
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> std::result::Result<Self::Value, E> {
                Ok(TruncationPolicy::Fixed(v))
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> std::result::Result<Self::Value, E> {
                if v < 0 {
                    Err(E::custom("truncation must be non-negative"))
                } else {
                    Ok(TruncationPolicy::Fixed(v as u64))
                }
            }
        }
        d.deserialize_any(V)
    }
}

/// The ring half of a job: one of the two supported front-ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JobRing {
    CompleteIntersection {
        weights: Vec<u64>,
        relations: Vec<u64>,
    },
    Pfaffian(PfaffianJob),
}

/// Pfaffian presentation as it appears in job documents. `n_r` (the `N_R`
/// of the Gorenstein base) defaults to the complete-intersection shift of
/// the base presentation when omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfaffianJob {
    pub base_weights: Vec<u64>,
    pub base_relations: Vec<u64>,
    pub n: u64,
    pub degrees: Vec<u64>,
    pub n_r: Option<i64>,
}

impl PfaffianJob {
    /// `N_R`: the override if given, otherwise `sum base relations - sum base weights`.
    pub fn base_shift(&self) -> i64 {
        self.n_r.unwrap_or_else(|| {
            self.base_relations.iter().map(|&d| d as i64).sum::<i64>()
                - self.base_weights.iter().map(|&w| w as i64).sum::<i64>()
        })
    }
}

/// A validated job: ring data, divisor degree, hypotheses, table depth and
/// truncation policy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub ring: JobRing,
    pub divisor_degree: u64,
    pub hypotheses: Hypotheses,
    pub max_m: u64,
    pub truncation: TruncationPolicy,
}

pub const DEFAULT_MAX_M: u64 = 25;

/// Upper bound on table depth accepted from job documents.
pub const MAX_TABLE_DEPTH: i64 = 1_000_000;

/// Raw document; all integers parsed wide and range-checked afterwards so
/// errors can name the offending field.
#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct JobDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    relations: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pfaffian: Option<PfaffianDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    divisor_degree: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hypotheses: Option<Hypotheses>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    truncation: Option<TruncationPolicy>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PfaffianDoc {
    base_weights: Vec<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    base_relations: Vec<i64>,
    #[serde(rename = "N")]
    n: i64,
    degrees: Vec<i64>,
    #[serde(rename = "N_R", skip_serializing_if = "Option::is_none")]
    n_r: Option<i64>,
}

fn non_negative(field: &str, values: &[i64]) -> Result<Vec<u64>> {
    values
        .iter()
        .map(|&v| {
            u64::try_from(v)
                .map_err(|_| Error::InvalidJob(format!("{field} must be non-negative, got {v}")))
        })
        .collect()
}

fn positive(field: &str, values: &[i64]) -> Result<Vec<u64>> {
    let vs = non_negative(field, values)?;
    if vs.contains(&0) {
        return Err(Error::InvalidJob(format!("{field} must be positive")));
    }
    Ok(vs)
}

/// Parse and validate a job document.
pub fn parse_job(text: &str) -> Result<JobSpec> {
    let doc: JobDoc = serde_json::from_str(text).map_err(|e| Error::InvalidJob(e.to_string()))?;

    let ring = match (&doc.weights, &doc.pfaffian) {
        (Some(_), Some(_)) => {
            return Err(Error::InvalidJob(
                "give either \"weights\" or \"pfaffian\", not both".into(),
            ))
        }
        (None, None) => {
            return Err(Error::InvalidJob(
                "missing field `weights` (or `pfaffian`)".into(),
            ))
        }
        (Some(weights), None) => {
            let weights = non_negative("weights", weights)?;
            if weights.is_empty() {
                return Err(Error::InvalidJob("weights must not be empty".into()));
            }
            let relations = positive("relations", doc.relations.as_deref().unwrap_or(&[]))?;
            if relations.len() >= weights.len() {
                return Err(Error::InvalidJob(format!(
                    "need more weights than relations, got {} weights and {} relations",
                    weights.len(),
                    relations.len()
                )));
            }
            JobRing::CompleteIntersection { weights, relations }
        }
        (None, Some(pf)) => {
            let base_weights = positive("pfaffian.base_weights", &pf.base_weights)?;
            if base_weights.is_empty() {
                return Err(Error::InvalidJob(
                    "pfaffian.base_weights must not be empty".into(),
                ));
            }
            let base_relations = positive("pfaffian.base_relations", &pf.base_relations)?;
            let degrees = positive("pfaffian.degrees", &pf.degrees)?;
            let n = u64::try_from(pf.n).ok().filter(|&n| n > 0).ok_or_else(|| {
                Error::InvalidJob(format!("pfaffian.N must be positive, got {}", pf.n))
            })?;
            JobRing::Pfaffian(PfaffianJob {
                base_weights,
                base_relations,
                n,
                degrees,
                n_r: pf.n_r,
            })
        }
    };

    let divisor_degree = match doc.divisor_degree {
        None => 0,
        Some(d) => u64::try_from(d).map_err(|_| {
            Error::InvalidJob(format!("divisor_degree must be non-negative, got {d}"))
        })?,
    };
    let max_m = match doc.max_m {
        None => DEFAULT_MAX_M,
        Some(m) if (1..=MAX_TABLE_DEPTH).contains(&m) => m as u64,
        Some(m) => {
            return Err(Error::InvalidJob(format!(
                "max_m must be in 1..={MAX_TABLE_DEPTH}, got {m}"
            )));
        }
    };

    Ok(JobSpec {
        ring,
        divisor_degree,
        hypotheses: doc.hypotheses.unwrap_or_default(),
        max_m,
        truncation: doc.truncation.unwrap_or(TruncationPolicy::Auto),
    })
}

/// Render a job back to its canonical document; `parse_job` of the result
/// reproduces the job exactly.
pub fn render_job(job: &JobSpec) -> String {
    let mut doc = JobDoc {
        divisor_degree: Some(job.divisor_degree as i64),
        hypotheses: Some(job.hypotheses),
        max_m: Some(job.max_m as i64),
        truncation: Some(job.truncation),
        ..JobDoc::default()
    };
    match &job.ring {
        JobRing::CompleteIntersection { weights, relations } => {
            doc.weights = Some(weights.iter().map(|&w| w as i64).collect());
            doc.relations = Some(relations.iter().map(|&d| d as i64).collect());
        }
        JobRing::Pfaffian(pf) => {
            doc.pfaffian = Some(PfaffianDoc {
                base_weights: pf.base_weights.iter().map(|&w| w as i64).collect(),
                base_relations: pf.base_relations.iter().map(|&d| d as i64).collect(),
                n: pf.n as i64,
                degrees: pf.degrees.iter().map(|&d| d as i64).collect(),
                n_r: pf.n_r,
            });
        }
    }
    let mut out = serde_json::to_string_pretty(&doc).expect("job documents always serialize");
    out.push('\n');
    out
}

impl JobSpec {
    /// Build the analysis substrate and dualizing shift for this job.
    pub fn build(&self) -> Result<(GradedRing, DualizingShift)> {
        match &self.ring {
            JobRing::CompleteIntersection { weights, relations } => {
                let ci = WeightedCI::new(
                    weights.clone(),
                    relations.clone(),
                    self.divisor_degree,
                    self.hypotheses,
                )?;
                let shift = ci.dualizing_shift();
                Ok((ci.graded_ring(), shift))
            }
            JobRing::Pfaffian(pf) => {
                let base =
                    FactoredHilbert::new(pf.base_weights.clone(), pf.base_relations.clone())?;
                let input = PfaffianInput::new(base, pf.base_shift(), pf.n, pf.degrees.clone())?;
                let shift = input.dualizing_shift();
                let ring = input.graded_ring(self.divisor_degree, self.hypotheses)?;
                Ok((ring, shift))
            }
        }
    }

    /// Resolve the truncation: the fixed value, or the largest coefficient
    /// index any analysis will request, plus a margin of one.
    pub fn resolve_truncation(&self, shift: &DualizingShift) -> Result<usize> {
        let t = match self.truncation {
            TruncationPolicy::Fixed(t) => t,
            TruncationPolicy::Auto => {
                let steps = self.max_m / shift.m0();
                let per_step = shift.sign_index(self.divisor_degree).max(shift.n()).max(0) as u64;
                steps
                    .checked_mul(per_step)
                    .and_then(|t| t.checked_add(1))
                    .ok_or(Error::TruncationTooLarge(u64::MAX))?
            }
        };
        if t > Error::MAX_TRUNCATION {
            return Err(Error::TruncationTooLarge(t));
        }
        Ok(t as usize)
    }
}

/// The four verdicts of a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub lc: Verdict,
    pub l2lt: Verdict,
    pub lt: Verdict,
    pub rational: Verdict,
}

/// Everything one job produces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularityReport {
    /// The dualizing shift `N` (equal to `N_A` when `m0 = 1`).
    pub n_a: i64,
    pub m0: u64,
    pub verdicts: Verdicts,
    pub plurigenera: Vec<PlurigeneraRow>,
    pub kodaira: KodairaReport,
    pub diagnostics: Vec<String>,
}

/// Run a job end to end. Dimension-based sections that cannot be computed
/// are skipped with a reason in `diagnostics`, never silently zeroed; the
/// sign-test verdicts are always present.
pub fn run_job(job: &JobSpec) -> Result<SingularityReport> {
    let (ring, shift) = job.build().map_err(|e| e.in_op("build"))?;
    let t = job.resolve_truncation(&shift)?;
    let mut diagnostics = Vec::new();
    diagnostics.push(match job.truncation {
        TruncationPolicy::Auto => format!("truncation: auto-resolved to {t}"),
        TruncationPolicy::Fixed(x) => format!("truncation: fixed at {x}"),
    });

    let verdicts = Verdicts {
        lc: classify::lc(&ring, &shift),
        l2lt: classify::l2lt(&ring, &shift),
        lt: classify::lt(&ring, &shift),
        rational: classify::rational(&ring, &shift),
    };
    if ring.divisor_degree() == 0
        && shift.n() == 0
        && shift.m0() == 1
        && verdicts.lc.is_yes()
        && verdicts.l2lt == Verdict::No
    {
        diagnostics.push(
            "boundary case N_A = 0 with empty divisor: lc holds while l2lt/lt fail; \
             this is exactly where log terminal is strictly smaller than log canonical"
                .to_string(),
        );
    }

    let series = ring.hilbert(t).map_err(|e| e.in_op("hilbert"))?;
    let negative_at = series.negativity_scan();
    if let Some(idx) = negative_at {
        diagnostics.push(format!(
            "negative Hilbert coefficient at degree {idx}: relation degrees are not a \
             regular sequence; dimension-based sections suppressed"
        ));
    }

    let mut plurigenera = Vec::new();
    if negative_at.is_some() {
        // suppressed, diagnostic already recorded
    } else if !ring.a0_is_base_field() {
        diagnostics.push("plurigenera: skipped (weight-0 variables present)".to_string());
    } else if !ring.hypotheses().isolated_singularity {
        diagnostics.push("plurigenera: skipped (isolated_singularity not asserted)".to_string());
    } else if ring.dim() < 2 {
        diagnostics.push(format!("plurigenera: skipped (dim V = {} < 2)", ring.dim()));
    } else if shift.m0() != 1 {
        diagnostics.push(format!(
            "plurigenera: skipped (m0 = {} > 1, dualizing module not free)",
            shift.m0()
        ));
    } else {
        plurigenera =
            plurigenera::table(&ring, &shift, job.max_m, t).map_err(|e| e.in_op("plurigenera"))?;
    }

    let mut kodaira =
        kodaira::dimension(&ring, &shift, job.max_m, t).map_err(|e| e.in_op("kodaira"))?;
    if negative_at.is_some() && !kodaira.pbar.is_empty() {
        kodaira.pbar.clear();
        diagnostics.push("kodaira pbar: suppressed (negative Hilbert coefficient)".to_string());
    }
    if let kodaira::KodairaDimension::Unknown { reason } = &kodaira.kbar {
        diagnostics.push(format!("kbar: UNKNOWN ({reason})"));
    }

    for (name, verdict) in [
        ("lc", &verdicts.lc),
        ("l2lt", &verdicts.l2lt),
        ("lt", &verdicts.lt),
        ("rational", &verdicts.rational),
    ] {
        if let Some(reason) = verdict.reason() {
            diagnostics.push(format!("{name}: UNKNOWN ({reason})"));
        }
    }

    Ok(SingularityReport {
        n_a: shift.n(),
        m0: shift.m0(),
        verdicts,
        plurigenera,
        kodaira,
        diagnostics,
    })
}

/// Output format of [`render_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Human,
    Machine,
}

/// Render a report: a plaintext table, or the canonical JSON document.
/// Machine rendering is deterministic down to the byte.
pub fn render_report(report: &SingularityReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Machine => {
            let mut out = serde_json::to_string_pretty(report).expect("reports always serialize");
            out.push('\n');
            out
        }
        ReportFormat::Human => render_human(report),
    }
}

fn render_human(report: &SingularityReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "singularity report");
    let _ = writeln!(out, "  N_A = {}   (m0 = {})", report.n_a, report.m0);
    let _ = writeln!(out, "verdicts");
    let _ = writeln!(out, "  log canonical (lc)      {}", report.verdicts.lc);
    let _ = writeln!(out, "  L2 log terminal (l2lt)  {}", report.verdicts.l2lt);
    let _ = writeln!(out, "  log terminal (lt)       {}", report.verdicts.lt);
    let _ = writeln!(
        out,
        "  rational                {}",
        report.verdicts.rational
    );
    let _ = writeln!(out, "plurigenera");
    if report.plurigenera.is_empty() {
        let _ = writeln!(out, "  (not computed; see diagnostics)");
    } else {
        let _ = writeln!(out, "  {:>5} {:>12} {:>12}", "m", "delta", "lambda");
        for row in &report.plurigenera {
            let _ = writeln!(
                out,
                "  {:>5} {:>12} {:>12}",
                row.m,
                row.delta.to_string(),
                row.lambda.to_string()
            );
        }
    }
    let _ = writeln!(out, "log Kodaira dimension");
    let _ = writeln!(out, "  kbar = {}", report.kodaira.kbar);
    if report.kodaira.pbar.is_empty() {
        let _ = writeln!(out, "  pbar: (not computed)");
    } else {
        let values: Vec<String> = report
            .kodaira
            .pbar
            .iter()
            .map(|p| p.value.to_string())
            .collect();
        let first = report.kodaira.pbar.first().unwrap().m;
        let last = report.kodaira.pbar.last().unwrap().m;
        let _ = writeln!(out, "  pbar (m = {first}..{last}): {}", values.join(" "));
    }
    let _ = writeln!(out, "diagnostics");
    for d in &report.diagnostics {
        let _ = writeln!(out, "  - {d}");
    }
    out
}
