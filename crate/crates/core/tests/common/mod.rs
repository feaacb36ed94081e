//! Shared test support: an independent monomial-counting oracle and a
//! seeded random corpus of weighted hypersurface presentations.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A random weighted hypersurface: positive weights and a relation degree
/// realized by some monomial (so the presented series is a genuine Hilbert
/// series with non-negative coefficients).
#[derive(Debug, Clone)]
pub struct Hypersurface {
    pub weights: Vec<u64>,
    pub degree: u64,
}

impl Hypersurface {
    pub fn shift(&self) -> i64 {
        self.degree as i64 - self.weights.iter().map(|&w| w as i64).sum::<i64>()
    }
}

/// Deterministic corpus: 3 or 4 variables, weights in 1..=8, relation
/// degree the weighted degree of a random monomial with total exponent
/// 1..=4.
pub fn random_hypersurfaces(count: usize, seed: u64) -> Vec<Hypersurface> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let nvars = rng.gen_range(3..=4usize);
            let weights: Vec<u64> = (0..nvars).map(|_| rng.gen_range(1..=8u64)).collect();
            let units = rng.gen_range(1..=4usize);
            let degree = (0..units)
                .map(|_| weights[rng.gen_range(0..nvars)])
                .sum::<u64>();
            Hypersurface { weights, degree }
        })
        .collect()
}

/// Count the monomials of each weighted degree `0..=cap` by enumerating,
/// one variable at a time, the exponent it carries. This is the brute
/// force the library results are checked against; it shares no code with
/// the series expansion.
pub fn monomial_counts(weights: &[u64], cap: usize) -> Vec<u128> {
    let mut counts = vec![0u128; cap + 1];
    counts[0] = 1;
    for &w in weights {
        let w = w as usize;
        let mut next = vec![0u128; cap + 1];
        for k in 0..=cap {
            let mut used = 0;
            while used <= k {
                next[k] += counts[k - used];
                used += w;
            }
        }
        counts = next;
    }
    counts
}

/// `dim A_k = M(k) - M(k - degree)` from the oracle counts.
fn dim_from_counts(counts: &[u128], degree: u64, k: i64) -> u128 {
    let at = |i: i64| -> u128 {
        if i < 0 {
            0
        } else {
            counts[i as usize]
        }
    };
    at(k) - at(k - degree as i64)
}

/// Oracle plurigenera `(delta_m, lambda_m)` for `m = 1..=max_m`, via the
/// monomial counts alone.
pub fn oracle_plurigenera(h: &Hypersurface, max_m: u64) -> Vec<(BigInt, BigInt)> {
    let shift = h.shift();
    let cap = (max_m as i64 * shift).max(0) as usize;
    let counts = monomial_counts(&h.weights, cap);
    (1..=max_m as i64)
        .map(|m| {
            let mut delta = BigInt::from(0);
            let mut lambda = BigInt::from(0);
            for k in 0..=(m * shift).max(-1) {
                let dim = BigInt::from(dim_from_counts(&counts, h.degree, k));
                if k < m * shift {
                    lambda += &dim;
                }
                delta += dim;
            }
            (delta, lambda)
        })
        .collect()
}
