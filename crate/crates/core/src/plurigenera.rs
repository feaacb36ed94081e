//! L2-plurigenera `delta_m` and lambda-plurigenera `lambda_m` of the vertex
//! singularity.
//!
//! For a free dualizing module these are partial sums of graded-piece
//! dimensions:
//!
//! ```text
//!   delta_m  = dim (omega_A^{[m]})_{<=0} = sum_{k=0}^{m*N_A}   dim A_k
//!   lambda_m = dim (omega_A^{[m]})_{<0}  = sum_{k=0}^{m*N_A-1} dim A_k
//! ```
//!
//! When `A_0` is not the base field the vertex set has positive dimension
//! and both plurigenera vanish for isolated singularities; the functions
//! return 0 in that case rather than attempting infinite-dimensional
//! counts. The formulas assume an isolated singularity and `dim V >= 2`,
//! which callers must assert.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::serialize_bigint;
use crate::ring::{DualizingShift, GradedRing};
use crate::series::Series;

/// One row of the plurigenera table. `lambda <= delta` always.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlurigeneraRow {
    pub m: u64,
    #[serde(serialize_with = "serialize_bigint")]
    pub delta: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub lambda: BigInt,
}

fn check_preconditions(ring: &GradedRing, shift: &DualizingShift) -> Result<()> {
    if !ring.hypotheses().isolated_singularity {
        return Err(Error::HypothesisNotAsserted("isolated_singularity"));
    }
    if ring.dim() < 2 {
        return Err(Error::DimensionTooSmall(ring.dim()));
    }
    if shift.m0() != 1 {
        return Err(Error::ShiftNotFree(shift.m0()));
    }
    Ok(())
}

fn delta_from_series(series: &Series, n: i64, m: u64) -> Result<BigInt> {
    series.partial_sum(0, m as i64 * n)
}

fn lambda_from_series(series: &Series, n: i64, m: u64) -> Result<BigInt> {
    series.partial_sum(0, m as i64 * n - 1)
}

/// The m-th L2-plurigenus `delta_m`.
pub fn delta(ring: &GradedRing, shift: &DualizingShift, m: u64, t: usize) -> Result<BigInt> {
    check_preconditions(ring, shift)?;
    if !ring.a0_is_base_field() {
        return Ok(BigInt::zero());
    }
    delta_from_series(&ring.hilbert(t)?, shift.n(), m)
}

/// The m-th lambda-plurigenus `lambda_m`.
pub fn lambda(ring: &GradedRing, shift: &DualizingShift, m: u64, t: usize) -> Result<BigInt> {
    check_preconditions(ring, shift)?;
    if !ring.a0_is_base_field() {
        return Ok(BigInt::zero());
    }
    lambda_from_series(&ring.hilbert(t)?, shift.n(), m)
}

/// Rows for `m = 1..=max_m`, expanding the series once.
pub fn table(
    ring: &GradedRing,
    shift: &DualizingShift,
    max_m: u64,
    t: usize,
) -> Result<Vec<PlurigeneraRow>> {
    check_preconditions(ring, shift)?;
    if !ring.a0_is_base_field() {
        return Ok((1..=max_m)
            .map(|m| PlurigeneraRow {
                m,
                delta: BigInt::zero(),
                lambda: BigInt::zero(),
            })
            .collect());
    }
    let series = ring.hilbert(t)?;
    (1..=max_m)
        .map(|m| {
            Ok(PlurigeneraRow {
                m,
                delta: delta_from_series(&series, shift.n(), m)?,
                lambda: lambda_from_series(&series, shift.n(), m)?,
            })
        })
        .collect()
}
