//! Presented graded rings and their dualizing shifts.
//!
//! Two front-ends produce the same substrate: a weighted-homogeneous
//! complete intersection ([`WeightedCI`]) and a ring presented by the
//! maximal Pfaffians of a skew matrix over a Gorenstein base
//! ([`PfaffianInput`]). Both reduce to a [`GradedRing`] (Hilbert-series
//! data, dimension, divisor degree, asserted hypotheses) plus a
//! [`DualizingShift`], which is what the classification, plurigenera and
//! Kodaira modules consume.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{FactoredHilbert, Series};

/// User-asserted hypotheses. Nothing here is ever verified; a verdict that
/// depends on a flag that is not asserted comes back UNKNOWN, never NO.
///
/// `V*` denotes the complement of the vertex set, `D*` the divisor off the
/// vertex. Whether `A_0` is the base field is derived from the weights and
/// is deliberately not a field of this struct.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Hypotheses {
    /// V is normal.
    pub normal: bool,
    /// V* is smooth.
    pub vstar_smooth: bool,
    /// The pair (V*, D*) is log canonical.
    pub vstar_pair_lc: bool,
    /// The pair (V*, D*) is L2-log-terminal.
    pub vstar_l2lt: bool,
    /// The singular locus of V is a single point (the vertex).
    pub isolated_singularity: bool,
}

impl Hypotheses {
    /// Every flag asserted; handy in tests and corpora.
    pub fn all() -> Self {
        Hypotheses {
            normal: true,
            vstar_smooth: true,
            vstar_pair_lc: true,
            vstar_l2lt: true,
            isolated_singularity: true,
        }
    }

    /// Gate for statements needing "(V*, D*) is lc".
    ///
    /// For an empty divisor this is implied by smoothness of V*, and also
    /// by L2-log-terminality (which for D = 0 is log terminality). For a
    /// nonzero divisor only the explicit assertion counts: a smooth V* says
    /// nothing about how D* sits inside it.
    pub(crate) fn pair_lc_gate(
        &self,
        divisor_degree: u64,
    ) -> std::result::Result<(), &'static str> {
        let ok =
            self.vstar_pair_lc || (divisor_degree == 0 && (self.vstar_smooth || self.vstar_l2lt));
        if ok {
            Ok(())
        } else {
            Err("vstar_pair_lc not asserted")
        }
    }

    /// Gate for statements needing "(V*, D*) is L2-lt".
    ///
    /// Implied by smoothness when the divisor is empty; for a nonzero
    /// divisor, a log canonical pair on a smooth V* is L2-lt as well.
    pub(crate) fn pair_l2lt_gate(
        &self,
        divisor_degree: u64,
    ) -> std::result::Result<(), &'static str> {
        let ok = self.vstar_l2lt
            || (divisor_degree == 0 && self.vstar_smooth)
            || (divisor_degree > 0 && self.vstar_smooth && self.vstar_pair_lc);
        if ok {
            Ok(())
        } else {
            Err("vstar_l2lt not asserted")
        }
    }

    /// Gate for the rational-singularities test (V* must have rational
    /// singularities; smoothness is the assertion this tool accepts).
    pub(crate) fn rational_gate(&self) -> std::result::Result<(), &'static str> {
        if self.vstar_smooth {
            Ok(())
        } else {
            Err("vstar_smooth not asserted")
        }
    }
}

/// The pair `(m0, N)` with `omega_A^{[m0]} = A[N]`.
///
/// Both front-ends here produce `m0 = 1` (the dualizing module itself is
/// free); carrying `m0` keeps Q-Gorenstein inputs representable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualizingShift {
    m0: u64,
    n: i64,
}

impl DualizingShift {
    pub fn new(m0: u64, n: i64) -> Result<Self> {
        if m0 == 0 {
            return Err(Error::NotMultipleOfM0 { m: 0, m0: 0 });
        }
        Ok(DualizingShift { m0, n })
    }

    /// The Gorenstein case `omega_A = A[N]`.
    pub fn free(n: i64) -> Self {
        DualizingShift { m0: 1, n }
    }

    pub fn m0(&self) -> u64 {
        self.m0
    }

    /// The integer shift `N`.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// `N + m0 * d`, the quantity whose sign decides the lc test and the
    /// log Kodaira trichotomy.
    pub fn sign_index(&self, divisor_degree: u64) -> i64 {
        self.n + self.m0 as i64 * divisor_degree as i64
    }

    /// Index of the graded piece housing `(omega_A^{[m]})_g`, i.e.
    /// `g + (m / m0) * N`. Errors unless `m` is a positive multiple of `m0`.
    pub fn graded_index(&self, m: u64, g: i64) -> Result<i64> {
        if m == 0 || !m.is_multiple_of(self.m0) {
            return Err(Error::NotMultipleOfM0 { m, m0: self.m0 });
        }
        Ok(g + (m / self.m0) as i64 * self.n)
    }
}

/// A weighted-homogeneous complete intersection presentation: variables of
/// weights `w_1..w_{n+s}`, relations of degrees `d_1..d_s`, an optional
/// principal divisor cut by a homogeneous equation of degree `d`
/// (`divisor_degree = 0` encodes the empty divisor), and the asserted
/// hypotheses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedCI {
    weights: Vec<u64>,
    relation_degrees: Vec<u64>,
    divisor_degree: u64,
    hypotheses: Hypotheses,
}

impl WeightedCI {
    pub fn new(
        weights: Vec<u64>,
        relation_degrees: Vec<u64>,
        divisor_degree: u64,
        hypotheses: Hypotheses,
    ) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyWeights);
        }
        if relation_degrees.len() >= weights.len() {
            return Err(Error::TooManyRelations {
                weights: weights.len(),
                relations: relation_degrees.len(),
            });
        }
        if relation_degrees.contains(&0) {
            return Err(Error::ZeroRelationDegree);
        }
        Ok(WeightedCI {
            weights,
            relation_degrees,
            divisor_degree,
            hypotheses,
        })
    }

    /// Hypersurface convenience: one relation, no divisor.
    pub fn hypersurface(weights: Vec<u64>, degree: u64, hypotheses: Hypotheses) -> Result<Self> {
        Self::new(weights, vec![degree], 0, hypotheses)
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn relation_degrees(&self) -> &[u64] {
        &self.relation_degrees
    }

    pub fn divisor_degree(&self) -> u64 {
        self.divisor_degree
    }

    pub fn hypotheses(&self) -> &Hypotheses {
        &self.hypotheses
    }

    /// `n = #weights - #relations`, the dimension of V.
    pub fn dim(&self) -> u64 {
        (self.weights.len() - self.relation_degrees.len()) as u64
    }

    /// True iff every weight is positive, i.e. `A_0` is the base field.
    pub fn a0_is_base_field(&self) -> bool {
        self.weights.iter().all(|&w| w > 0)
    }

    /// The Gorenstein shift `N_A = sum d_i - sum w_j` (weight-0 variables
    /// contribute 0 to the sum but are counted).
    pub fn dualizing_shift(&self) -> DualizingShift {
        let n = self.relation_degrees.iter().map(|&d| d as i64).sum::<i64>()
            - self.weights.iter().map(|&w| w as i64).sum::<i64>();
        DualizingShift::free(n)
    }

    /// Hilbert series to truncation `t`; delegates to the derived
    /// [`GradedRing`] (weight-0 variables stripped).
    pub fn hilbert(&self, t: usize) -> Result<Series> {
        self.graded_ring().hilbert(t)
    }

    /// `dim (omega_A^{[m]})_g = dim A_{g + (m/m0) N}`.
    pub fn graded_canonical_dim(
        &self,
        shift: &DualizingShift,
        m: u64,
        g: i64,
        t: usize,
    ) -> Result<BigInt> {
        self.graded_ring().graded_canonical_dim(shift, m, g, t)
    }

    /// Derive the common substrate consumed by the analysis modules.
    pub fn graded_ring(&self) -> GradedRing {
        let positive: Vec<u64> = self.weights.iter().copied().filter(|&w| w > 0).collect();
        let all_weights_positive = positive.len() == self.weights.len();
        let factored = FactoredHilbert::new(positive, self.relation_degrees.clone())
            .expect("positive weights and validated degrees");
        GradedRing {
            factored,
            all_weights_positive,
            dim: self.dim(),
            divisor_degree: self.divisor_degree,
            hypotheses: self.hypotheses,
        }
    }
}

/// A ring presented by the maximal Pfaffians of a `(2n+1) x (2n+1)` skew
/// matrix over a Gorenstein graded base `R` with `omega_R = R[N_R]`.
///
/// The degree data is `N` and `d_1..d_{2n+1}` with `sum d_i = n * N`; the
/// minimal resolution then forces `omega_A = A[N + N_R]` and a closed-form
/// Hilbert numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfaffianInput {
    base_hilbert: FactoredHilbert,
    base_shift: i64,
    resolution_degree: u64,
    pfaffian_degrees: Vec<u64>,
}

impl PfaffianInput {
    pub fn new(
        base_hilbert: FactoredHilbert,
        base_shift: i64,
        resolution_degree: u64,
        pfaffian_degrees: Vec<u64>,
    ) -> Result<Self> {
        if pfaffian_degrees.len().is_multiple_of(2) {
            return Err(Error::EvenPfaffianDegrees(pfaffian_degrees.len()));
        }
        if resolution_degree == 0 || pfaffian_degrees.contains(&0) {
            return Err(Error::ZeroRelationDegree);
        }
        let half = (pfaffian_degrees.len() / 2) as i64;
        let sum: i64 = pfaffian_degrees.iter().map(|&d| d as i64).sum();
        let expected = half * resolution_degree as i64;
        if sum != expected {
            return Err(Error::PfaffianDegreeConstraint { sum, expected });
        }
        for &d in &pfaffian_degrees {
            let s = resolution_degree as i64 - d as i64;
            if s < 0 {
                return Err(Error::NegativeResolutionShift(s));
            }
        }
        Ok(PfaffianInput {
            base_hilbert,
            base_shift,
            resolution_degree,
            pfaffian_degrees,
        })
    }

    pub fn base_hilbert(&self) -> &FactoredHilbert {
        &self.base_hilbert
    }

    /// `N_R` with `omega_R = R[N_R]`.
    pub fn base_shift(&self) -> i64 {
        self.base_shift
    }

    /// `N`, the degree of the last resolution twist.
    pub fn resolution_degree(&self) -> u64 {
        self.resolution_degree
    }

    pub fn pfaffian_degrees(&self) -> &[u64] {
        &self.pfaffian_degrees
    }

    /// The Hilbert numerator from the resolution:
    /// `1 - sum_i t^{d_i} + sum_j t^{N - d_j} - t^N`.
    pub fn resolution_numerator(&self) -> Vec<BigInt> {
        let n = self.resolution_degree as usize;
        let mut poly = vec![BigInt::zero(); n + 1];
        poly[0] = BigInt::one();
        for &d in &self.pfaffian_degrees {
            poly[d as usize] -= BigInt::one();
            poly[n - d as usize] += BigInt::one();
        }
        poly[n] -= BigInt::one();
        poly
    }

    /// The factored Hilbert series of `A = R/I`.
    pub fn hilbert(&self) -> FactoredHilbert {
        let resolution = self.resolution_numerator();
        let extra = polynomial_product(self.base_hilbert.extra_numerator(), &resolution);
        FactoredHilbert::with_extra_numerator(
            self.base_hilbert.denominator_weights().to_vec(),
            self.base_hilbert.relation_degrees().to_vec(),
            extra,
        )
        .expect("validated base data")
    }

    /// `omega_A = A[N + N_R]`.
    pub fn dualizing_shift(&self) -> DualizingShift {
        DualizingShift::free(self.resolution_degree as i64 + self.base_shift)
    }

    /// Derive the analysis substrate. `dim A = dim R - 3`; the base
    /// dimension is read off the presentation of `R`.
    pub fn graded_ring(&self, divisor_degree: u64, hypotheses: Hypotheses) -> Result<GradedRing> {
        let base_dim = self.base_hilbert.denominator_weights().len() as i64
            - self.base_hilbert.relation_degrees().len() as i64;
        let dim = base_dim - 3;
        if dim < 1 {
            return Err(Error::TooManyRelations {
                weights: self.base_hilbert.denominator_weights().len(),
                relations: self.base_hilbert.relation_degrees().len() + 3,
            });
        }
        Ok(GradedRing {
            factored: self.hilbert(),
            all_weights_positive: true,
            dim: dim as u64,
            divisor_degree,
            hypotheses,
        })
    }
}

/// Expand a ring presented by Pfaffians: the Hilbert series of `A` to
/// truncation `t` together with its dualizing shift.
pub fn pfaffian_ring(input: &PfaffianInput, t: usize) -> Result<(Series, DualizingShift)> {
    Ok((input.hilbert().expand(t)?, input.dualizing_shift()))
}

/// Orders of the cyclic groups acting on the charts of the weighted blowup
/// and weighted completion: a homogeneous generator of degree `d` yields a
/// chart `(Y x A^1)/Z_d`. Input order and duplicates are preserved.
pub fn chart_orders(generator_degrees: &[u64]) -> Result<Vec<u64>> {
    if generator_degrees.contains(&0) {
        return Err(Error::ZeroGeneratorDegree);
    }
    Ok(generator_degrees.to_vec())
}

/// The substrate shared by both front-ends: enough data to expand the
/// Hilbert series and evaluate every graded-piece formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRing {
    factored: FactoredHilbert,
    all_weights_positive: bool,
    dim: u64,
    divisor_degree: u64,
    hypotheses: Hypotheses,
}

impl GradedRing {
    pub fn factored(&self) -> &FactoredHilbert {
        &self.factored
    }

    /// True iff `A_0` is the base field. When false, the expanded series
    /// carries ranks over `A_0` of the positive-weight sub-presentation,
    /// not dimensions over the base field.
    pub fn a0_is_base_field(&self) -> bool {
        self.all_weights_positive
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    pub fn divisor_degree(&self) -> u64 {
        self.divisor_degree
    }

    pub fn hypotheses(&self) -> &Hypotheses {
        &self.hypotheses
    }

    pub fn hilbert(&self, t: usize) -> Result<Series> {
        self.factored.expand(t)
    }

    /// `dim (omega_A^{[m]})_g = dim A_{g + (m/m0) N}`, zero for negative
    /// indices.
    pub fn graded_canonical_dim(
        &self,
        shift: &DualizingShift,
        m: u64,
        g: i64,
        t: usize,
    ) -> Result<BigInt> {
        let idx = shift.graded_index(m, g)?;
        self.hilbert(t)?.coeff(idx)
    }
}

fn polynomial_product(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn ci(weights: &[u64], relations: &[u64]) -> WeightedCI {
        WeightedCI::new(weights.to_vec(), relations.to_vec(), 0, Hypotheses::all()).unwrap()
    }

    #[test]
    fn shift_of_quadric_cone() {
        assert_eq!(ci(&[1, 1, 1], &[2]).dualizing_shift().n(), -1);
    }

    #[test]
    fn shift_of_two_three_seven() {
        assert_eq!(ci(&[21, 14, 6], &[42]).dualizing_shift().n(), 1);
    }

    #[test]
    fn shift_of_brieskorn_local_model() {
        // weights (bc, cd, bd), relation bcd: N_A = bcd (1 - 1/b - 1/c - 1/d)
        for (b, c, d) in [(2u64, 2, 2), (2, 3, 5), (3, 4, 5), (2, 3, 7)] {
            let n = ci(&[b * c, c * d, b * d], &[b * c * d])
                .dualizing_shift()
                .n();
            let lhs = n;
            let rhs = (b * c * d) as i64 - (b * c + c * d + b * d) as i64;
            assert_eq!(lhs, rhs);
            // sign matches the reciprocal-sum boundary
            let sum_gt_one = c * d + b * d + b * c > b * c * d;
            assert_eq!(n < 0, sum_gt_one);
        }
    }

    #[test]
    fn hilbert_of_cubic_cone() {
        let s = ci(&[1, 1, 1], &[3]).hilbert(3).unwrap();
        let expected: Vec<BigInt> = [1, 3, 6, 9].iter().map(|&x| big(x)).collect();
        assert_eq!(s.coeffs(), &expected[..]);
    }

    #[test]
    fn hilbert_sparse_weights() {
        let s = ci(&[21, 14, 6], &[42]).hilbert(2).unwrap();
        assert_eq!(s.coeff(1).unwrap(), BigInt::zero());
    }

    #[test]
    fn hilbert_plane() {
        let s = ci(&[1, 1], &[]).hilbert(7).unwrap();
        assert_eq!(s.coeff(7).unwrap(), big(8));
    }

    #[test]
    fn hilbert_strips_weight_zero_variables() {
        // rank over A_0 = C[y] of C[x, y] is 1 in every degree
        let r = WeightedCI::new(vec![1, 0], vec![], 0, Hypotheses::default()).unwrap();
        assert!(!r.a0_is_base_field());
        let s = r.hilbert(5).unwrap();
        assert!(s.coeffs().iter().all(|c| c.is_one()));
    }

    #[test]
    fn presentation_validation() {
        assert_eq!(
            WeightedCI::new(vec![], vec![], 0, Hypotheses::default()).unwrap_err(),
            Error::EmptyWeights
        );
        assert_eq!(
            WeightedCI::new(vec![1, 1], vec![2, 2], 0, Hypotheses::default()).unwrap_err(),
            Error::TooManyRelations {
                weights: 2,
                relations: 2
            }
        );
        assert_eq!(
            WeightedCI::new(vec![1, 1], vec![0], 0, Hypotheses::default()).unwrap_err(),
            Error::ZeroRelationDegree
        );
    }

    #[test]
    fn graded_canonical_dim_examples() {
        let r = ci(&[21, 14, 6], &[42]);
        let shift = r.dualizing_shift();
        // m = 1, g = 0: dim A_1 = 0
        assert_eq!(
            r.graded_canonical_dim(&shift, 1, 0, 10).unwrap(),
            BigInt::zero()
        );

        let elliptic = ci(&[1, 1, 1], &[3]);
        let shift = elliptic.dualizing_shift();
        assert_eq!(shift.n(), 0);
        assert_eq!(
            elliptic.graded_canonical_dim(&shift, 5, 0, 10).unwrap(),
            BigInt::one()
        );
    }

    #[test]
    fn graded_canonical_dim_negative_index_is_zero() {
        let r = ci(&[15, 10, 6], &[30]); // N_A = -1
        let shift = r.dualizing_shift();
        for m in 1..=20 {
            assert_eq!(
                r.graded_canonical_dim(&shift, m, 0, 5).unwrap(),
                BigInt::zero()
            );
        }
    }

    #[test]
    fn graded_canonical_dim_requires_multiple_of_m0() {
        let r = ci(&[1, 1, 1], &[3]);
        let shift = DualizingShift::new(2, 0).unwrap();
        assert_eq!(
            r.graded_canonical_dim(&shift, 3, 0, 5).unwrap_err(),
            Error::NotMultipleOfM0 { m: 3, m0: 2 }
        );
        assert_eq!(
            r.graded_canonical_dim(&shift, 4, 0, 5).unwrap(),
            BigInt::one()
        );
    }

    #[test]
    fn chart_orders_examples() {
        assert_eq!(chart_orders(&[2, 3]).unwrap(), vec![2, 3]);
        assert_eq!(chart_orders(&[1, 1, 1]).unwrap(), vec![1, 1, 1]);
        assert_eq!(chart_orders(&[6]).unwrap(), vec![6]);
        assert_eq!(
            chart_orders(&[2, 0]).unwrap_err(),
            Error::ZeroGeneratorDegree
        );
    }

    #[test]
    fn pfaffian_generic_linear_five_by_five() {
        let base = FactoredHilbert::new(vec![1; 6], vec![]).unwrap();
        let input = PfaffianInput::new(base, -6, 5, vec![2; 5]).unwrap();
        let (series, shift) = pfaffian_ring(&input, 2).unwrap();
        assert_eq!(shift.n(), -1);
        assert_eq!(shift.m0(), 1);
        assert_eq!(
            series.coeffs(),
            &[big(1), big(6), big(16)][..],
            "hand expansion of (1 - 5t^2 + 5t^3 - t^5)/(1-t)^6"
        );
    }

    #[test]
    fn pfaffian_degree_constraint() {
        let base = FactoredHilbert::new(vec![1; 6], vec![]).unwrap();
        assert_eq!(
            PfaffianInput::new(base, -6, 4, vec![2; 5]).unwrap_err(),
            Error::PfaffianDegreeConstraint {
                sum: 10,
                expected: 8
            }
        );
    }

    #[test]
    fn pfaffian_rejects_even_length() {
        let base = FactoredHilbert::new(vec![1; 6], vec![]).unwrap();
        assert_eq!(
            PfaffianInput::new(base, -6, 4, vec![2; 4]).unwrap_err(),
            Error::EvenPfaffianDegrees(4)
        );
    }

    #[test]
    fn pfaffian_rejects_negative_resolution_shift() {
        let base = FactoredHilbert::new(vec![1; 8], vec![]).unwrap();
        // 7 degrees summing to 3*6 = 18, with one entry exceeding N = 6
        assert_eq!(
            PfaffianInput::new(base, -8, 6, vec![8, 2, 2, 2, 2, 1, 1]).unwrap_err(),
            Error::NegativeResolutionShift(-2)
        );
    }

    proptest! {
        /// N_A of a concatenated presentation is the sum of the factors'
        /// shifts.
        #[test]
        fn shift_is_additive_over_products(
            w1 in proptest::collection::vec(1u64..9, 2..5),
            w2 in proptest::collection::vec(1u64..9, 2..5),
            d1 in proptest::collection::vec(1u64..12, 0..2),
            d2 in proptest::collection::vec(1u64..12, 0..2),
        ) {
            prop_assume!(d1.len() < w1.len() && d2.len() < w2.len());
            let a = ci(&w1, &d1);
            let b = ci(&w2, &d2);
            let mut w = w1.clone();
            w.extend_from_slice(&w2);
            let mut d = d1.clone();
            d.extend_from_slice(&d2);
            let product = ci(&w, &d);
            prop_assert_eq!(
                product.dualizing_shift().n(),
                a.dualizing_shift().n() + b.dualizing_shift().n()
            );
        }

        /// The Hilbert series of a concatenated presentation is the
        /// coefficient-wise convolution of the factors.
        #[test]
        fn hilbert_is_multiplicative_over_products(
            w1 in proptest::collection::vec(1u64..6, 2..4),
            w2 in proptest::collection::vec(1u64..6, 2..4),
            d1 in proptest::collection::vec(1u64..8, 0..2),
            d2 in proptest::collection::vec(1u64..8, 0..2),
            t in 0usize..30,
        ) {
            prop_assume!(d1.len() < w1.len() && d2.len() < w2.len());
            let mut w = w1.clone();
            w.extend_from_slice(&w2);
            let mut d = d1.clone();
            d.extend_from_slice(&d2);
            let product = ci(&w, &d).hilbert(t).unwrap();
            let convolved = ci(&w1, &d1)
                .hilbert(t)
                .unwrap()
                .convolve(&ci(&w2, &d2).hilbert(t).unwrap());
            prop_assert_eq!(product, convolved);
        }

        /// The resolution numerator is palindromic up to sign: reversing the
        /// coefficients of the degree-N polynomial negates it.
        #[test]
        fn pfaffian_numerator_antipalindromic(
            half in 1usize..4,
            seed_degrees in proptest::collection::vec(1u64..6, 1..4),
        ) {
            // build a valid degree list: 2*half+1 entries summing to half*n
            let count = 2 * half + 1;
            let mut degrees: Vec<u64> = (0..count)
                .map(|i| seed_degrees[i % seed_degrees.len()])
                .collect();
            // pick N large enough, then fix the sum by adjusting one entry
            let n = 2 * degrees.iter().max().copied().unwrap() + 2;
            let target = half as i64 * n as i64;
            let sum: i64 = degrees.iter().map(|&d| d as i64).sum();
            let adjust = target - sum + degrees[0] as i64;
            prop_assume!(adjust >= 1 && adjust <= n as i64);
            degrees[0] = adjust as u64;

            let base = FactoredHilbert::new(vec![1; 4], vec![]).unwrap();
            let input = PfaffianInput::new(base, -4, n, degrees).unwrap();
            let poly = input.resolution_numerator();
            let reversed: Vec<BigInt> = poly.iter().rev().cloned().collect();
            let negated: Vec<BigInt> = poly.iter().map(|c| -c).collect();
            prop_assert_eq!(reversed, negated);
        }
    }
}
