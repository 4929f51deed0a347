//! Engines for the patterns `1 2 .. (k-2) k (k-1)`: 132, 1243, 12354.
//!
//! The recursion removes the first element (value `i`) of a permutation of
//! length `n` and reduces the rest. Per remaining value, the state tracks a
//! chain of `k - 2` tier exponents: tier 0 counts descents-below (21-pairs
//! whose bottom is that value), tier 1 counts 132-triples headed by that
//! value, tier 2 counts 1243-quadruples headed by it. Removing value `i`
//!
//! * completes one full pattern for every top-tier partial counted above
//!   `i` — a factor of `t` each;
//! * promotes every lower-tier partial above `i` by the pivot's next-tier
//!   exponent;
//! * creates `i - 1` new 21-pairs, contributing `t` to the power of the
//!   tier-0 exponents below the pivot.
//!
//! In truncated mode exponents collapse at `r + 1` (every branch touching a
//! collapsed exponent with positive multiplicity dies under the cap), which
//! keeps the memoized state space polynomial in `n` for fixed `r`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Cap, Coeff, QPoly, TruncPoly};
use crate::tier::{
    collapse_cells, step_cells, PrefactorRule, RunLengthState, VecCell, VecEngine,
};

/// Per-position tier exponents in canonical run-length form.
///
/// Cells always carry three slots; patterns of size `k` use the first
/// `k - 2` and leave the rest zero.
pub type TierState = RunLengthState<VecCell>;

impl TierState {
    /// All-zero state of length `n` (the weight state of raw `S_n`).
    pub fn all_zero(n: usize) -> TierState {
        RunLengthState::uniform([0; 3], n)
    }

    /// Build from per-tier exponent sequences (1 to 3 tiers, equal lengths).
    pub fn from_tier_vectors(tiers: &[&[u32]]) -> Result<TierState> {
        if tiers.is_empty() || tiers.len() > 3 {
            return Err(Error::Parse(format!(
                "expected 1 to 3 tiers, got {}",
                tiers.len()
            )));
        }
        let n = tiers[0].len();
        if tiers.iter().any(|t| t.len() != n) {
            return Err(Error::Parse("tier vectors differ in length".into()));
        }
        let cells: Vec<VecCell> = (0..n)
            .map(|j| {
                let mut c = [0u32; 3];
                for (m, tier) in tiers.iter().enumerate() {
                    c[m] = tier[j];
                }
                c
            })
            .collect();
        Ok(RunLengthState::from_cells(&cells))
    }

    /// Expanded exponent sequence of one tier.
    pub fn tier_vector(&self, m: usize) -> Vec<u32> {
        self.expand().iter().map(|c| c[m]).collect()
    }
}

fn tiers_for(k: usize) -> Result<usize> {
    match k {
        3..=5 => Ok(k - 2),
        _ => Err(Error::UnsupportedFamily(format!(
            "tail-swap pattern size {k} (supported: 3, 4, 5)"
        ))),
    }
}

/// One branch of the removal recursion in raw (uncollapsed) form.
///
/// Returns the branch's `t`-exponent (the sum of tier-0 exponents strictly
/// before position `i`) and the length-`(n-1)` successor state.
pub fn step_insert_tailswap(state: &TierState, i: usize, k: usize) -> Result<(u64, TierState)> {
    let tiers = tiers_for(k)?;
    let len = state.len();
    if i < 1 || i > len {
        return Err(Error::Parse(format!("position {i} out of range 1..={len}")));
    }
    let cells = state.expand();
    let prefactor = cells[..i - 1].iter().map(|c| c[0] as u64).sum();
    Ok((prefactor, step_cells(&cells, i, tiers, None)))
}

/// Replace every exponent above `r + 1` by `r + 1`, re-merging runs.
pub fn collapse_state(state: &TierState, r: usize) -> TierState {
    collapse_cells(&state.expand(), r)
}

/// Memoized evaluator for one tail-swap pattern at a fixed cap.
///
/// Keeps its memo across calls, so ascending-`n` sequence runs share all
/// previously computed states.
pub struct TailSwapEngine<C: Coeff = BigInt> {
    k: usize,
    inner: VecEngine<C>,
}

impl<C: Coeff> TailSwapEngine<C> {
    pub fn new(k: usize, cap: Cap) -> Result<Self> {
        let tiers = tiers_for(k)?;
        Ok(TailSwapEngine {
            k,
            inner: VecEngine::new(tiers, cap, PrefactorRule::PrefixSum),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cap(&self) -> Cap {
        self.inner.cap()
    }

    /// Bound the number of memoized states; evaluation falls back to
    /// recomputation beyond the bound (results are unchanged).
    pub fn set_memo_limit(&mut self, limit: Option<usize>) {
        self.inner.set_memo_limit(limit);
    }

    /// Consistency-check hook: disable exponent collapsing so truncated
    /// runs carry true exponents.
    pub fn set_saturation(&mut self, on: bool) {
        self.inner.set_saturation(on);
    }

    pub fn memo_len(&self) -> usize {
        self.inner.memo_len()
    }

    /// The occurrence-count distribution over `S_n`, chopped at the cap.
    pub fn poly(&mut self, n: usize) -> TruncPoly<C> {
        self.inner.poly(n)
    }
}

/// `f_n(t)` for the size-`k` tail-swap pattern, chopped at `cap`.
pub fn evaluate_tailswap(k: usize, n: usize, cap: Cap) -> Result<TruncPoly<BigInt>> {
    Ok(TailSwapEngine::new(k, cap)?.poly(n))
}

/// Inversion-refined `g_n(t, q)`; setting `q = 1` recovers the plain run.
pub fn evaluate_tailswap_q(k: usize, n: usize, cap: Cap) -> Result<TruncPoly<QPoly>> {
    Ok(TailSwapEngine::<QPoly>::new(k, cap)?.poly(n))
}
