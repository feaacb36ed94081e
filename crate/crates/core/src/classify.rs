//! Singularity-type verdicts: log canonical, L2-log-terminal, log terminal
//! and rational.
//!
//! Each verdict has two routes. The sign tests decide everything from the
//! dualizing shift and the divisor degree alone (`N + m0*d <= 0` and
//! friends), so they work even when graded pieces are not
//! finite-dimensional. The brute-force scans realize the defining
//! vanishing conditions degree by degree on the expanded Hilbert series and
//! exist as an independent cross-check; they require all weights positive
//! and a free dualizing module.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{DualizingShift, GradedRing};
use crate::series::Series;

/// Tri-state verdict. A missing hypothesis never downgrades to NO; it
/// surfaces as UNKNOWN with the name of the flag to assert.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "value")]
pub enum Verdict {
    #[serde(rename = "YES")]
    Yes,
    #[serde(rename = "NO")]
    No,
    #[serde(rename = "UNKNOWN")]
    Unknown { reason: String },
}

impl Verdict {
    fn from_sign(holds: bool) -> Self {
        if holds {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    fn unknown(reason: &str) -> Self {
        Verdict::Unknown {
            reason: reason.to_string(),
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }

    /// The missing-hypothesis reason, when UNKNOWN.
    pub fn reason(&self) -> Option<&str> {
        match self {
            Verdict::Unknown { reason } => Some(reason),
            _ => None,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Yes => write!(f, "YES"),
            Verdict::No => write!(f, "NO"),
            Verdict::Unknown { reason } => write!(f, "UNKNOWN ({reason})"),
        }
    }
}

/// Outcome of a brute-force graded scan over `m = 1..=max_m_checked`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceWitness {
    pub max_m_checked: u64,
    pub first_failure: Option<ScanFailure>,
}

impl BruteForceWitness {
    /// True when the scan found every forbidden graded piece zero.
    pub fn is_clean(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// First nonzero forbidden graded piece: at level `m`, the piece of degree
/// `degree` (a degree within the twisted canonical module) has dimension
/// `dim >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanFailure {
    pub m: u64,
    pub degree: i64,
    pub dim: BigInt,
}

/// `(V, D)` log canonical: YES iff `N + m0*d <= 0`, gated on the pair
/// hypothesis.
pub fn lc(ring: &GradedRing, shift: &DualizingShift) -> Verdict {
    match ring.hypotheses().pair_lc_gate(ring.divisor_degree()) {
        Err(reason) => Verdict::unknown(reason),
        Ok(()) => Verdict::from_sign(shift.sign_index(ring.divisor_degree()) <= 0),
    }
}

/// `(V, D)` L2-log-terminal: YES iff `d > 0` and `N + m0*d <= 0`, or
/// `d = 0` and `N < 0`.
pub fn l2lt(ring: &GradedRing, shift: &DualizingShift) -> Verdict {
    match ring.hypotheses().pair_l2lt_gate(ring.divisor_degree()) {
        Err(reason) => Verdict::unknown(reason),
        Ok(()) => {
            let d = ring.divisor_degree();
            let holds = if d > 0 {
                shift.sign_index(d) <= 0
            } else {
                shift.n() < 0
            };
            Verdict::from_sign(holds)
        }
    }
}

/// `(V, D)` log terminal. For an empty divisor this coincides with the L2
/// variant; for a nonzero divisor the sign tests do not decide it.
pub fn lt(ring: &GradedRing, shift: &DualizingShift) -> Verdict {
    if ring.divisor_degree() == 0 {
        l2lt(ring, shift)
    } else {
        Verdict::unknown(
            "log terminality is only decided for an empty divisor; see the l2lt verdict",
        )
    }
}

/// `V` has rational singularities: YES iff `N_A < 0`. Needs `V*` rational
/// (asserted via smoothness) and `A` Cohen-Macaulay, which both front-ends
/// guarantee by construction; the sign test itself reads `omega_A`, so it
/// needs `m0 = 1`.
pub fn rational(ring: &GradedRing, shift: &DualizingShift) -> Verdict {
    if let Err(reason) = ring.hypotheses().rational_gate() {
        return Verdict::unknown(reason);
    }
    if shift.m0() != 1 {
        return Verdict::unknown("rational sign test needs m0 = 1");
    }
    Verdict::from_sign(shift.n() < 0)
}

/// Scan `(omega_A^{[m]}(mD))_{<0}` for `m = 1..=max_m`: the piece of degree
/// `g` sits at series index `g + m(N_A + d)`, so the forbidden indices run
/// over `[0, m(N_A + d) - 1]`.
pub fn lc_bruteforce(
    ring: &GradedRing,
    shift: &DualizingShift,
    max_m: u64,
    t: usize,
) -> Result<BruteForceWitness> {
    let d = ring.divisor_degree() as i64;
    scan(ring, shift, max_m, t, true, |m, n| m as i64 * (n + d))
}

/// Scan `(omega_A^{[m]}((m-1)D))_{<=0}`: the piece of degree `g` sits at
/// series index `g + m*N_A + (m-1)*d`, forbidden indices
/// `[0, m*N_A + (m-1)*d]`.
pub fn l2lt_bruteforce(
    ring: &GradedRing,
    shift: &DualizingShift,
    max_m: u64,
    t: usize,
) -> Result<BruteForceWitness> {
    let d = ring.divisor_degree() as i64;
    scan(ring, shift, max_m, t, false, |m, n| {
        m as i64 * n + (m as i64 - 1) * d
    })
}

/// Single scan of `(omega_A)_{<=0}`: indices `[0, N_A]`.
pub fn rational_bruteforce(
    ring: &GradedRing,
    shift: &DualizingShift,
    t: usize,
) -> Result<BruteForceWitness> {
    scan(ring, shift, 1, t, false, |_, n| n)
}

/// Shared scan driver. `grading_shift(m, N)` gives the series index of the
/// module degree 0 at level `m`; the forbidden pieces are the degrees
/// `g < 0` (`strict`) or `g <= 0` (non-strict), i.e. series indices
/// `[0, grading_shift - 1]` resp. `[0, grading_shift]`. An empty range
/// needs no dimension data, so weight-0 inputs only fail when some range
/// is non-empty.
fn scan(
    ring: &GradedRing,
    shift: &DualizingShift,
    max_m: u64,
    t: usize,
    strict: bool,
    grading_shift: impl Fn(u64, i64) -> i64,
) -> Result<BruteForceWitness> {
    if shift.m0() != 1 {
        return Err(Error::ShiftNotFree(shift.m0()));
    }
    let n = shift.n();
    let mut series: Option<Series> = None;
    let mut first_failure = None;

    'outer: for m in 1..=max_m {
        let zero_at = grading_shift(m, n);
        let hi = if strict { zero_at - 1 } else { zero_at };
        if hi < 0 {
            continue;
        }
        if !ring.a0_is_base_field() {
            return Err(Error::WeightZeroVariables);
        }
        if series.is_none() {
            let expanded = ring.hilbert(t)?;
            if let Some(idx) = expanded.negativity_scan() {
                return Err(Error::NegativeCoefficient(idx));
            }
            series = Some(expanded);
        }
        let expanded = series.as_ref().unwrap();
        for j in 0..=hi {
            let dim = expanded.coeff(j)?;
            if !dim.is_zero() {
                first_failure = Some(ScanFailure {
                    m,
                    degree: j - zero_at,
                    dim,
                });
                break 'outer;
            }
        }
    }
    Ok(BruteForceWitness {
        max_m_checked: max_m,
        first_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Hypotheses, WeightedCI};
    use num_traits::One;
    use proptest::prelude::*;

    fn pair(
        weights: &[u64],
        relations: &[u64],
        divisor_degree: u64,
    ) -> (GradedRing, DualizingShift) {
        let ci = WeightedCI::new(
            weights.to_vec(),
            relations.to_vec(),
            divisor_degree,
            Hypotheses::all(),
        )
        .unwrap();
        (ci.graded_ring(), ci.dualizing_shift())
    }

    #[test]
    fn lc_weight_zero_pair_boundary() {
        // weights (bc, 0, ac, ab), relation abc, divisor degree bc
        let check = |a: u64, b: u64, c: u64, expect_yes: bool| {
            let (ring, shift) = pair(&[b * c, 0, a * c, a * b], &[a * b * c], b * c);
            let v = lc(&ring, &shift);
            assert_eq!(v.is_yes(), expect_yes, "(a,b,c) = ({a},{b},{c})");
            assert!(!v.is_unknown());
        };
        check(2, 2, 2, true); // 1/2 + 1/2 >= 1
        check(5, 2, 2, true);
        check(2, 3, 3, false); // 1/3 + 1/3 < 1
        check(4, 3, 3, false);
    }

    #[test]
    fn lc_quadric_cone() {
        let (ring, shift) = pair(&[1, 1, 1], &[2], 0);
        assert_eq!(lc(&ring, &shift), Verdict::Yes);
    }

    #[test]
    fn lc_unknown_without_pair_hypothesis() {
        let ci = WeightedCI::new(vec![1, 1, 1], vec![2], 3, Hypotheses::default()).unwrap();
        let v = lc(&ci.graded_ring(), &ci.dualizing_shift());
        assert_eq!(v.reason(), Some("vstar_pair_lc not asserted"));
    }

    #[test]
    fn l2lt_examples() {
        let (a1, s) = pair(&[1, 1, 1], &[2], 0);
        assert_eq!(l2lt(&a1, &s), Verdict::Yes); // N_A = -1 < 0

        let (elliptic, s) = pair(&[1, 1, 1], &[3], 0);
        assert_eq!(l2lt(&elliptic, &s), Verdict::No); // N_A = 0

        let (pair_ring, s) = pair(&[4, 0, 4, 4], &[8], 4);
        assert_eq!(l2lt(&pair_ring, &s), Verdict::Yes); // d > 0 and N_A + d = 0
    }

    #[test]
    fn lt_equals_l2lt_for_empty_divisor() {
        let (ring, shift) = pair(&[15, 10, 6], &[30], 0);
        assert_eq!(lt(&ring, &shift), l2lt(&ring, &shift));

        let (with_divisor, shift) = pair(&[1, 1, 1], &[3], 3);
        assert!(lt(&with_divisor, &shift).is_unknown());
    }

    #[test]
    fn rational_examples() {
        let (e8, s) = pair(&[15, 10, 6], &[30], 0);
        assert_eq!(rational(&e8, &s), Verdict::Yes); // N_A = -1

        let (v237, s) = pair(&[21, 14, 6], &[42], 0);
        assert_eq!(rational(&v237, &s), Verdict::No); // N_A = 1

        // local model with 1/b + 1/c + 1/d > 1
        let (b, c, d) = (2u64, 2, 3);
        let (local, s) = pair(&[b * c, c * d, b * d], &[b * c * d], 0);
        assert_eq!(rational(&local, &s), Verdict::Yes);
    }

    #[test]
    fn lc_scan_clean_for_negative_shift() {
        let (ring, shift) = pair(&[1, 1, 1], &[2], 0);
        let w = lc_bruteforce(&ring, &shift, 20, 5).unwrap();
        assert!(w.is_clean());
        assert_eq!(w.max_m_checked, 20);
    }

    #[test]
    fn lc_scan_catches_positive_shift() {
        // elliptic cone with a cubic-section divisor: N_A + d = 3
        let (ring, shift) = pair(&[1, 1, 1], &[3], 3);
        let w = lc_bruteforce(&ring, &shift, 10, 40).unwrap();
        let failure = w.first_failure.unwrap();
        assert_eq!(failure.m, 1);
        assert_eq!(failure.degree, -3); // dim A_0 = 1 contributes at degree -3
        assert!(failure.dim.is_one());
    }

    #[test]
    fn lc_scan_boundary_is_clean() {
        let (ring, shift) = pair(&[4, 0, 4, 4], &[8], 4); // N_A + d = 0
        assert!(lc_bruteforce(&ring, &shift, 30, 5).unwrap().is_clean());
    }

    #[test]
    fn l2lt_scan_examples() {
        let (e8, s) = pair(&[15, 10, 6], &[30], 0);
        assert!(l2lt_bruteforce(&e8, &s, 20, 40).unwrap().is_clean());

        let (elliptic, s) = pair(&[1, 1, 1], &[3], 0);
        let w = l2lt_bruteforce(&elliptic, &s, 1, 10).unwrap();
        let failure = w.first_failure.unwrap();
        assert_eq!((failure.m, failure.degree), (1, 0));
        assert!(failure.dim.is_one());

        // weight-0 pair at the boundary: every range is empty, so the
        // weight-0 variable is never consulted
        let (pair_ring, s) = pair(&[4, 0, 4, 4], &[8], 4);
        assert!(l2lt_bruteforce(&pair_ring, &s, 25, 5).unwrap().is_clean());
    }

    #[test]
    fn l2lt_scan_weight_zero_with_nonempty_range_errors() {
        let (pair_ring, s) = pair(&[4, 0, 4, 4], &[8], 5); // N_A + d = 1 > 0
        assert_eq!(
            lc_bruteforce(&pair_ring, &s, 5, 20).unwrap_err(),
            Error::WeightZeroVariables
        );
    }

    #[test]
    fn rational_scan_examples() {
        let (e8, s) = pair(&[15, 10, 6], &[30], 0);
        assert!(rational_bruteforce(&e8, &s, 5).unwrap().is_clean());

        let (v237, s) = pair(&[21, 14, 6], &[42], 0);
        let w = rational_bruteforce(&v237, &s, 5).unwrap();
        let failure = w.first_failure.unwrap();
        assert_eq!(failure.degree, -1);
        assert!(failure.dim.is_one());

        let (elliptic, s) = pair(&[1, 1, 1], &[3], 0);
        let w = rational_bruteforce(&elliptic, &s, 5).unwrap();
        let failure = w.first_failure.unwrap();
        assert_eq!(failure.degree, 0);
        assert!(failure.dim.is_one());
    }

    #[test]
    fn scan_rejects_non_regular_presentation() {
        // degree-3 relations among even-weight variables: the series of
        // (1-t^3)^2/(1-t^2)^3 goes negative at t^3
        let ci = WeightedCI::new(vec![2, 2, 2], vec![3, 3], 5, Hypotheses::all()).unwrap();
        let (ring, shift) = (ci.graded_ring(), ci.dualizing_shift());
        // N_A + d = 6 - 6 + 5 = 5 > 0, so the scan wants dimensions
        assert_eq!(
            lc_bruteforce(&ring, &shift, 5, 20).unwrap_err(),
            Error::NegativeCoefficient(3)
        );
    }

    #[test]
    fn scan_requires_free_shift() {
        let (ring, _) = pair(&[1, 1, 1], &[3], 0);
        let shift = DualizingShift::new(2, 0).unwrap();
        assert_eq!(
            lc_bruteforce(&ring, &shift, 5, 5).unwrap_err(),
            Error::ShiftNotFree(2)
        );
    }

    proptest! {
        /// Sign tests and brute-force scans agree on every presentation with
        /// positive weights. The first failing level of the l2lt scan is at
        /// most the divisor degree, so max_m starts above it.
        #[test]
        fn sign_tests_match_scans(
            vars in proptest::collection::vec((1u64..8, 0u64..4), 2..5),
            divisor_degree in 0u64..8,
            max_m in 10u64..40,
        ) {
            // a relation degree realized by a monomial keeps the series
            // coefficients non-negative
            let weights: Vec<u64> = vars.iter().map(|v| v.0).collect();
            let d_rel: u64 = vars.iter().map(|v| v.0 * v.1).sum();
            prop_assume!(d_rel >= 1);
            let ci = WeightedCI::new(
                weights.clone(),
                vec![d_rel],
                divisor_degree,
                Hypotheses::all(),
            ).unwrap();
            let ring = ci.graded_ring();
            let shift = ci.dualizing_shift();
            let t = ((max_m as i64 + 1) * (shift.n().abs() + divisor_degree as i64 + 1)) as usize;

            let lc_clean = lc_bruteforce(&ring, &shift, max_m, t).unwrap().is_clean();
            prop_assert_eq!(lc_clean, lc(&ring, &shift).is_yes());

            let l2lt_clean = l2lt_bruteforce(&ring, &shift, max_m, t).unwrap().is_clean();
            prop_assert_eq!(l2lt_clean, l2lt(&ring, &shift).is_yes());

            let rational_clean = rational_bruteforce(&ring, &shift, t).unwrap().is_clean();
            prop_assert_eq!(rational_clean, rational(&ring, &shift).is_yes());
        }

        /// The inclusion chain: with a nonzero divisor, lc implies L2-lt;
        /// with an empty divisor, L2-lt implies lc.
        #[test]
        fn inclusion_chain(
            weights in proptest::collection::vec(1u64..8, 2..5),
            relation in 1u64..20,
            divisor_degree in 0u64..8,
        ) {
            let ci = WeightedCI::new(
                weights,
                vec![relation],
                divisor_degree,
                Hypotheses::all(),
            ).unwrap();
            let ring = ci.graded_ring();
            let shift = ci.dualizing_shift();
            let lc_v = lc(&ring, &shift);
            let l2lt_v = l2lt(&ring, &shift);
            prop_assert!(!lc_v.is_unknown() && !l2lt_v.is_unknown());
            if divisor_degree > 0 && lc_v.is_yes() {
                prop_assert!(l2lt_v.is_yes());
            }
            if divisor_degree == 0 && l2lt_v.is_yes() {
                prop_assert!(lc_v.is_yes());
            }
        }
    }
}
