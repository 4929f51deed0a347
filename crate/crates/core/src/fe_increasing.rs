//! Engines for the increasing patterns 123 and 1234.
//!
//! Same tier machinery as the tail-swap family, but with the other
//! prefactor: removing the first element (value `i`) of a length-`n`
//! permutation creates an ascent pair with each of the `n - i` larger
//! values, so the branch carries the pivot's tier-0 exponent to the power
//! `n - i` instead of the prefix product. Tier 0 counts ascent pairs
//! bottomed at a value, tier 1 counts 123-triples headed by it.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Cap, Coeff, QPoly, TruncPoly};
use crate::tier::{PrefactorRule, VecEngine};

fn tiers_for(k: usize) -> Result<usize> {
    match k {
        3 | 4 => Ok(k - 2),
        _ => Err(Error::UnsupportedFamily(format!(
            "increasing pattern size {k} (supported: 3, 4)"
        ))),
    }
}

/// Memoized evaluator for `1 2 .. k`, sharing its memo across `n`.
pub struct IncreasingEngine<C: Coeff = BigInt> {
    k: usize,
    inner: VecEngine<C>,
}

impl<C: Coeff> IncreasingEngine<C> {
    pub fn new(k: usize, cap: Cap) -> Result<Self> {
        let tiers = tiers_for(k)?;
        Ok(IncreasingEngine {
            k,
            inner: VecEngine::new(tiers, cap, PrefactorRule::RemainingPower),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cap(&self) -> Cap {
        self.inner.cap()
    }

    pub fn set_memo_limit(&mut self, limit: Option<usize>) {
        self.inner.set_memo_limit(limit);
    }

    pub fn set_saturation(&mut self, on: bool) {
        self.inner.set_saturation(on);
    }

    pub fn memo_len(&self) -> usize {
        self.inner.memo_len()
    }

    pub fn poly(&mut self, n: usize) -> TruncPoly<C> {
        self.inner.poly(n)
    }
}

/// `f_n(t)` for the pattern 123, chopped at `cap`.
pub fn evaluate_123(n: usize, cap: Cap) -> TruncPoly<BigInt> {
    IncreasingEngine::new(3, cap).expect("3 is supported").poly(n)
}

/// `f_n(t)` for the pattern 1234, chopped at `cap`.
pub fn evaluate_1234(n: usize, cap: Cap) -> TruncPoly<BigInt> {
    IncreasingEngine::new(4, cap).expect("4 is supported").poly(n)
}

/// Inversion-refined variants.
pub fn evaluate_123_q(n: usize, cap: Cap) -> TruncPoly<QPoly> {
    IncreasingEngine::<QPoly>::new(3, cap)
        .expect("3 is supported")
        .poly(n)
}

pub fn evaluate_1234_q(n: usize, cap: Cap) -> TruncPoly<QPoly> {
    IncreasingEngine::<QPoly>::new(4, cap)
        .expect("4 is supported")
        .poly(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_force_distribution, OracleOptions};
    use crate::perm::PatternSpec;

    fn oracle_poly(n: usize, k: usize) -> TruncPoly<BigInt> {
        let tau = PatternSpec::Increasing(k).pattern();
        brute_force_distribution(n, &[tau], &OracleOptions::default())
            .unwrap()
            .to_trunc_poly(Cap::Unbounded)
    }

    #[test]
    fn full_mode_matches_oracle() {
        for n in 0..=7 {
            assert_eq!(evaluate_123(n, Cap::Unbounded), oracle_poly(n, 3), "123, n = {n}");
            assert_eq!(evaluate_1234(n, Cap::Unbounded), oracle_poly(n, 4), "1234, n = {n}");
        }
    }

    #[test]
    fn avoiders_are_catalan_numbers() {
        let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        let mut eng = IncreasingEngine::<BigInt>::new(3, Cap::Finite(0)).unwrap();
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(eng.poly(n).coeff(0), BigInt::from(c), "n = {n}");
        }
    }

    #[test]
    fn single_occurrence_counts_123() {
        // 3/n * C(2n, n-3) for small n
        let mut eng = IncreasingEngine::<BigInt>::new(3, Cap::Finite(1)).unwrap();
        for (n, expected) in [(4usize, 6u64), (5, 27), (6, 110)] {
            assert_eq!(eng.poly(n).coeff(1), BigInt::from(expected), "n = {n}");
        }
    }

    #[test]
    fn avoiders_1234_prefix() {
        let expected = [1u64, 1, 2, 6, 23, 103, 513, 2761];
        let mut eng = IncreasingEngine::<BigInt>::new(4, Cap::Finite(0)).unwrap();
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(eng.poly(n).coeff(0), BigInt::from(c), "n = {n}");
        }
    }

    #[test]
    fn truncated_prefix_agrees_with_full() {
        for k in [3, 4] {
            for r in 0..=3 {
                let mut eng = IncreasingEngine::<BigInt>::new(k, Cap::Finite(r)).unwrap();
                for n in 0..=8 {
                    let full = if k == 3 {
                        evaluate_123(n, Cap::Unbounded)
                    } else {
                        evaluate_1234(n, Cap::Unbounded)
                    };
                    assert_eq!(eng.poly(n), full.chop(r), "k = {k}, r = {r}, n = {n}");
                }
            }
        }
    }

    #[test]
    fn q_refinement_collapses() {
        for n in 0..=6 {
            assert_eq!(
                evaluate_123_q(n, Cap::Unbounded).at_q_one(),
                evaluate_123(n, Cap::Unbounded),
                "n = {n}"
            );
            assert_eq!(
                evaluate_1234_q(n, Cap::Unbounded).at_q_one(),
                evaluate_1234(n, Cap::Unbounded),
                "n = {n}"
            );
        }
    }

    #[test]
    fn rejects_unsupported_sizes() {
        assert!(IncreasingEngine::<BigInt>::new(2, Cap::Unbounded).is_err());
        assert!(IncreasingEngine::<BigInt>::new(5, Cap::Unbounded).is_err());
    }
}
