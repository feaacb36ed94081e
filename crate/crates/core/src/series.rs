//! Exact truncated power series over arbitrary-precision integers.
//!
//! A [`Series`] stores the coefficients of a formal power series in one
//! variable `t` up to and including a truncation index `T`. All arithmetic
//! is exact; there is no rounding and no fixed-width overflow. Binary
//! operations carry the minimum truncation of their inputs.
//!
//! A [`FactoredHilbert`] is a Hilbert series kept in factored rational form
//!
//! ```text
//!   extra_numerator * prod_i (1 - t^{d_i})  /  prod_j (1 - t^{w_j})
//! ```
//!
//! whose expansion coefficient at `k` is `dim A_k` for the graded ring
//! presented by weights `w_j` and a regular sequence of relations of
//! degrees `d_i`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact integer coefficients of a power series, valid for indices `0..=T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// Build a series from explicit coefficients; `coeffs[k]` is the
    /// coefficient of `t^k` and the truncation is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least index 0");
        Series { coeffs }
    }

    /// The largest valid coefficient index.
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`.
    ///
    /// Negative `k` yields 0 (the ring is non-negatively graded). Indices
    /// beyond the truncation are an error carrying the needed bound, so
    /// callers can re-expand instead of silently reading 0.
    pub fn coeff(&self, k: i64) -> Result<BigInt> {
        if k < 0 {
            return Ok(BigInt::zero());
        }
        let idx = k as u64;
        if idx > self.truncation() as u64 {
            return Err(Error::TruncationExceeded {
                needed: k,
                truncation: self.truncation(),
            });
        }
        Ok(self.coeffs[idx as usize].clone())
    }

    /// `sum_{k = max(a,0)}^{b} coeff(k)`; 0 on an empty range.
    ///
    /// `b` beyond the truncation is an error even if the range would be
    /// empty for other reasons, so the contract stays order-independent.
    pub fn partial_sum(&self, a: i64, b: i64) -> Result<BigInt> {
        if b >= 0 && b as u64 > self.truncation() as u64 {
            return Err(Error::TruncationExceeded {
                needed: b,
                truncation: self.truncation(),
            });
        }
        let lo = a.max(0);
        if b < lo {
            return Ok(BigInt::zero());
        }
        Ok(self.coeffs[lo as usize..=b as usize].iter().sum())
    }

    /// Smallest index with a negative coefficient, if any.
    ///
    /// A hit proves the relation degrees cannot come from a regular
    /// sequence; expansion itself never errors on this, callers decide.
    pub fn negativity_scan(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| c.is_negative())
    }

    /// Coefficient-wise product up to the minimum truncation of the inputs.
    pub fn convolve(&self, other: &Series) -> Series {
        let t = self.truncation().min(other.truncation());
        let mut out = vec![BigInt::zero(); t + 1];
        for (i, a) in self.coeffs.iter().take(t + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (b, o) in other.coeffs.iter().zip(out[i..].iter_mut()) {
                *o += a * b;
            }
        }
        Series { coeffs: out }
    }

    /// All coefficients in index order.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
}

/// A Hilbert series in factored rational form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredHilbert {
    /// Degrees `d_i`, each contributing a numerator factor `(1 - t^{d_i})`.
    relation_degrees: Vec<u64>,
    /// Explicit integer polynomial multiplied into the numerator
    /// (coefficient of `t^k` at position `k`). Defaults to 1.
    extra_numerator: Vec<BigInt>,
    /// Weights `w_j`, each contributing a denominator factor `1/(1 - t^{w_j})`.
    denominator_weights: Vec<u64>,
}

impl FactoredHilbert {
    /// Standard complete-intersection form: `prod (1 - t^{d_i}) / prod (1 - t^{w_j})`.
    pub fn new(denominator_weights: Vec<u64>, relation_degrees: Vec<u64>) -> Result<Self> {
        Self::with_extra_numerator(denominator_weights, relation_degrees, vec![BigInt::one()])
    }

    /// Same, with an explicit extra numerator polynomial (used for
    /// resolution-derived series such as the Pfaffian case).
    pub fn with_extra_numerator(
        denominator_weights: Vec<u64>,
        relation_degrees: Vec<u64>,
        extra_numerator: Vec<BigInt>,
    ) -> Result<Self> {
        if denominator_weights.contains(&0) {
            return Err(Error::NonpositiveWeight);
        }
        if relation_degrees.contains(&0) {
            return Err(Error::ZeroRelationDegree);
        }
        assert!(
            !extra_numerator.is_empty(),
            "extra numerator needs at least a constant term"
        );
        Ok(FactoredHilbert {
            relation_degrees,
            extra_numerator,
            denominator_weights,
        })
    }

    pub fn relation_degrees(&self) -> &[u64] {
        &self.relation_degrees
    }

    pub fn denominator_weights(&self) -> &[u64] {
        &self.denominator_weights
    }

    pub fn extra_numerator(&self) -> &[BigInt] {
        &self.extra_numerator
    }

    /// Expand to a [`Series`] with truncation `t`.
    ///
    /// The numerator polynomial is expanded first; then every weight `w`
    /// applies the prefix recurrence `c[k] += c[k - w]`, which is exact
    /// division by `(1 - t^w)` up to the truncation.
    pub fn expand(&self, t: usize) -> Result<Series> {
        if self.denominator_weights.contains(&0) {
            return Err(Error::NonpositiveWeight);
        }
        let mut c = vec![BigInt::zero(); t + 1];
        for (k, v) in self.extra_numerator.iter().take(t + 1).enumerate() {
            c[k] = v.clone();
        }
        for &d in &self.relation_degrees {
            let d = d as usize;
            if d > t {
                // (1 - t^d) only touches indices >= d
                continue;
            }
            for k in (d..=t).rev() {
                let sub = c[k - d].clone();
                c[k] -= sub;
            }
        }
        for &w in &self.denominator_weights {
            let w = w as usize;
            if w > t {
                continue;
            }
            for k in w..=t {
                let add = c[k - w].clone();
                c[k] += add;
            }
        }
        Ok(Series { coeffs: c })
    }
}
