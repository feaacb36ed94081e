//! Logarithmic plurigenera and the logarithmic Kodaira dimension of the
//! smooth locus `V \ (D u Sing V)`.
//!
//! With `omega_A^{[m0]} = A[N]` and a divisor cut in degree `d`, the
//! logarithmic plurigenus at a multiple `m = k*m0` is the single
//! graded-piece dimension `dim A_{k(N + m0 d)}`, and the Kodaira dimension
//! is the trichotomy on the sign of `N + m0 d`:
//!
//! ```text
//!   N + m0 d < 0  ->  -infinity
//!   N + m0 d = 0  ->  0
//!   N + m0 d > 0  ->  dim V - 1
//! ```
//!
//! The sequence of plurigenera is reported alongside the verdict; a
//! least-squares growth exponent on the nonzero tail serves as a numerical
//! cross-check of the trichotomy, never as an input to it.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::serialize_bigint;
use crate::ring::{DualizingShift, GradedRing};
use crate::series::Series;

/// The logarithmic Kodaira dimension trichotomy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum KodairaDimension {
    #[serde(rename = "MINUS_INFINITY")]
    MinusInfinity,
    #[serde(rename = "ZERO")]
    Zero,
    /// `dim V - 1`, carrying the value.
    #[serde(rename = "DIM_MINUS_ONE")]
    DimMinusOne(u64),
    #[serde(rename = "UNKNOWN")]
    Unknown { reason: String },
}

impl KodairaDimension {
    pub fn is_unknown(&self) -> bool {
        matches!(self, KodairaDimension::Unknown { .. })
    }

    /// True for `-infinity` and `0`, the range equivalent to log
    /// canonicity of the vertex.
    pub fn at_most_zero(&self) -> bool {
        matches!(
            self,
            KodairaDimension::MinusInfinity | KodairaDimension::Zero
        )
    }
}

impl std::fmt::Display for KodairaDimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KodairaDimension::MinusInfinity => write!(f, "-infinity"),
            KodairaDimension::Zero => write!(f, "0"),
            KodairaDimension::DimMinusOne(k) => write!(f, "{k} (= dim V - 1)"),
            KodairaDimension::Unknown { reason } => write!(f, "UNKNOWN ({reason})"),
        }
    }
}

/// One logarithmic plurigenus `pbar_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LogPlurigenus {
    pub m: u64,
    #[serde(serialize_with = "serialize_bigint")]
    pub value: BigInt,
}

/// Kodaira data of one ring: the plurigenus sequence (at multiples of
/// `m0`, empty when graded dimensions are unavailable) and the verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KodairaReport {
    pub pbar: Vec<LogPlurigenus>,
    pub kbar: KodairaDimension,
    pub m0_used: u64,
}

fn gates(ring: &GradedRing) -> Result<()> {
    if !ring.a0_is_base_field() {
        return Err(Error::PositiveDimensionalVertex);
    }
    ring.hypotheses()
        .pair_lc_gate(ring.divisor_degree())
        .map_err(Error::HypothesisNotAsserted)?;
    Ok(())
}

fn log_plurigenus_from_series(
    series: &Series,
    shift: &DualizingShift,
    divisor_degree: u64,
    m: u64,
) -> Result<BigInt> {
    if m == 0 || !m.is_multiple_of(shift.m0()) {
        return Err(Error::NotMultipleOfM0 { m, m0: shift.m0() });
    }
    let idx = (m / shift.m0()) as i64 * shift.sign_index(divisor_degree);
    series.coeff(idx)
}

/// `pbar_m = dim A_{(m/m0)(N + m0 d)}`; needs `A_0 = C`, the pair-lc
/// hypothesis, and `m` a positive multiple of `m0`.
pub fn log_plurigenus(
    ring: &GradedRing,
    shift: &DualizingShift,
    m: u64,
    t: usize,
) -> Result<BigInt> {
    gates(ring)?;
    log_plurigenus_from_series(&ring.hilbert(t)?, shift, ring.divisor_degree(), m)
}

/// Sections of the m-canonical sheaf supported on the divisor at infinity
/// of the weighted completion: the non-positive part, i.e.
/// `sum_{j=0}^{(m/m0)(N + m0 d)} dim A_j`.
pub fn infinity_section_dim(
    ring: &GradedRing,
    shift: &DualizingShift,
    m: u64,
    t: usize,
) -> Result<BigInt> {
    gates(ring)?;
    if m == 0 || !m.is_multiple_of(shift.m0()) {
        return Err(Error::NotMultipleOfM0 { m, m0: shift.m0() });
    }
    let bound = (m / shift.m0()) as i64 * shift.sign_index(ring.divisor_degree());
    ring.hilbert(t)?.partial_sum(0, bound)
}

/// The full Kodaira report: verdict by the sign trichotomy, plurigenera
/// filled at multiples of `m0` up to `max_m` when dimensions are
/// available.
///
/// When `A_0` is not the base field, the only decided case is an empty
/// divisor with isolated singularities (general fibers of the projection
/// to the vertex set are affine spaces, killing every plurigenus); other
/// weight-0 inputs come back UNKNOWN.
pub fn dimension(
    ring: &GradedRing,
    shift: &DualizingShift,
    max_m: u64,
    t: usize,
) -> Result<KodairaReport> {
    if !ring.a0_is_base_field() {
        let kbar = if ring.divisor_degree() == 0 && ring.hypotheses().isolated_singularity {
            KodairaDimension::MinusInfinity
        } else {
            KodairaDimension::Unknown {
                reason: "weight-0 variables: only the case of an empty divisor with an \
                         isolated singularity is decided"
                    .to_string(),
            }
        };
        return Ok(KodairaReport {
            pbar: Vec::new(),
            kbar,
            m0_used: shift.m0(),
        });
    }
    if let Err(reason) = ring.hypotheses().pair_lc_gate(ring.divisor_degree()) {
        return Ok(KodairaReport {
            pbar: Vec::new(),
            kbar: KodairaDimension::Unknown {
                reason: reason.to_string(),
            },
            m0_used: shift.m0(),
        });
    }

    let sign = shift.sign_index(ring.divisor_degree());
    let kbar = match sign.cmp(&0) {
        std::cmp::Ordering::Less => KodairaDimension::MinusInfinity,
        std::cmp::Ordering::Equal => KodairaDimension::Zero,
        std::cmp::Ordering::Greater => KodairaDimension::DimMinusOne(ring.dim() - 1),
    };

    let series = ring.hilbert(t)?;
    let mut pbar = Vec::new();
    let mut m = shift.m0();
    while m <= max_m {
        pbar.push(LogPlurigenus {
            m,
            value: log_plurigenus_from_series(&series, shift, ring.divisor_degree(), m)?,
        });
        m += shift.m0();
    }
    Ok(KodairaReport {
        pbar,
        kbar,
        m0_used: shift.m0(),
    })
}

/// Least-squares growth exponent of a plurigenus sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthEstimate {
    /// Raw slope of `log pbar_m` against `log m` over the nonzero tail.
    pub raw_slope: f64,
    /// The slope rounded to the nearest integer.
    pub rounded: i64,
}

/// Fit `log pbar_m ~ k log m` on the maximal all-nonzero suffix of the
/// sequence. Returns `None` for sequences shorter than 8 entries or with
/// no nonzero tail. A single-point tail yields slope 0.
///
/// This is a numerical cross-check of the trichotomy; the verdict itself
/// is always the exact sign test.
pub fn growth_exponent_estimate(pbar: &[LogPlurigenus]) -> Option<GrowthEstimate> {
    if pbar.len() < 8 {
        return None;
    }
    let tail_start = pbar
        .iter()
        .rposition(|p| p.value.is_zero())
        .map_or(0, |i| i + 1);
    let tail = &pbar[tail_start..];
    if tail.is_empty() {
        return None;
    }
    let points: Vec<(f64, f64)> = tail
        .iter()
        .map(|p| {
            let x = (p.m as f64).ln();
            let y = p.value.to_f64().unwrap_or(f64::MAX).ln();
            (x, y)
        })
        .collect();
    let raw_slope = if points.len() < 2 {
        0.0
    } else {
        let n = points.len() as f64;
        let sx: f64 = points.iter().map(|p| p.0).sum();
        let sy: f64 = points.iter().map(|p| p.1).sum();
        let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
        (n * sxy - sx * sy) / (n * sxx - sx * sx)
    };
    Some(GrowthEstimate {
        raw_slope,
        rounded: raw_slope.round() as i64,
    })
}
