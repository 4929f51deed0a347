//! Per-value exponent states and the vector-state recursion core.
//!
//! The vector-state engines all follow the same recursion: a state assigns
//! to every position a small tuple of exponents (one per tier of the
//! partial-pattern chain); removing the first element of the permutation
//! turns a length-n state into a length-(n-1) state by a position-wise
//! substitution, and the pattern completions created by the removal appear
//! as a power of `t` in front of the branch. Memoization on the canonical
//! state is what makes the truncated schemes polynomial-sized.

use std::collections::HashMap;
use std::hash::Hash;

use crate::poly::{Cap, Coeff, TruncPoly};

/// Maximum tier depth used by any vector-state engine (pattern length 5).
pub(crate) const MAX_TIERS: usize = 3;

/// One position's exponents, one slot per tier; unused tiers stay zero.
pub(crate) type VecCell = [u32; MAX_TIERS];

/// Componentwise comparison for exponent tuples (lexicographic `Ord` would
/// not express the per-tier monotonicity invariant).
pub trait CellOrd: Copy + PartialEq {
    fn componentwise_le(&self, other: &Self) -> bool;
}

impl<const N: usize> CellOrd for [u32; N] {
    fn componentwise_le(&self, other: &Self) -> bool {
        self.iter().zip(other).all(|(a, b)| a <= b)
    }
}

/// Run-length-encoded sequence of per-position exponent tuples.
///
/// Runs of equal consecutive tuples are merged maximally, so structural
/// equality is the canonical-state equality the memo tables key on. Every
/// engine-reachable state has componentwise nondecreasing tiers; this is
/// asserted in debug builds.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RunLengthState<Cell> {
    runs: Vec<(Cell, u32)>,
}

impl<Cell: CellOrd> RunLengthState<Cell> {
    pub(crate) fn from_cells(cells: &[Cell]) -> Self {
        debug_assert!(
            cells.windows(2).all(|w| w[0].componentwise_le(&w[1])),
            "tier exponents must be nondecreasing along positions"
        );
        let mut runs: Vec<(Cell, u32)> = Vec::new();
        for &c in cells {
            match runs.last_mut() {
                Some((prev, count)) if *prev == c => *count += 1,
                _ => runs.push((c, 1)),
            }
        }
        RunLengthState { runs }
    }

    pub(crate) fn uniform(cell: Cell, n: usize) -> Self {
        let runs = if n == 0 {
            Vec::new()
        } else {
            vec![(cell, n as u32)]
        };
        RunLengthState { runs }
    }

    /// Number of positions (sum of run lengths).
    pub fn len(&self) -> usize {
        self.runs.iter().map(|(_, c)| *c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub(crate) fn expand(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.len());
        for &(cell, count) in &self.runs {
            for _ in 0..count {
                out.push(cell);
            }
        }
        out
    }
}

/// Which power of `t` a branch at pivot `i` carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum PrefactorRule {
    /// Sum of tier-0 exponents strictly before the pivot: the removed first
    /// element sits below the values at those positions.
    PrefixSum,
    /// `(len - i)` times the pivot's tier-0 exponent: the removed element
    /// pairs with every value above the pivot.
    RemainingPower,
}

/// Memoized recursion over [`RunLengthState`]s for a single main variable.
pub(crate) struct VecEngine<C: Coeff> {
    tiers: usize,
    cap: Cap,
    prefactor: PrefactorRule,
    saturate: bool,
    memo: HashMap<RunLengthState<VecCell>, TruncPoly<C>>,
    memo_limit: Option<usize>,
}

impl<C: Coeff> VecEngine<C> {
    pub fn new(tiers: usize, cap: Cap, prefactor: PrefactorRule) -> Self {
        assert!((1..=MAX_TIERS).contains(&tiers));
        VecEngine {
            tiers,
            cap,
            prefactor,
            saturate: true,
            memo: HashMap::new(),
            memo_limit: None,
        }
    }

    pub fn cap(&self) -> Cap {
        self.cap
    }

    pub fn set_memo_limit(&mut self, limit: Option<usize>) {
        self.memo_limit = limit;
    }

    /// Disabling exponent collapsing keeps true exponents in truncated mode;
    /// results must agree with the collapsed run (consistency check hook).
    pub fn set_saturation(&mut self, on: bool) {
        self.saturate = on;
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Memoized states with exactly `len` positions.
    #[cfg(test)]
    pub fn memo_states_of_len(&self, len: usize) -> Vec<RunLengthState<VecCell>> {
        self.memo
            .keys()
            .filter(|s| s.len() == len)
            .cloned()
            .collect()
    }

    /// The distribution polynomial for length `n` (all-zero initial state).
    pub fn poly(&mut self, n: usize) -> TruncPoly<C> {
        let root = RunLengthState::uniform([0; MAX_TIERS], n);
        self.eval(&root)
    }

    fn sat_level(&self) -> Option<u32> {
        if self.saturate {
            self.cap.saturation_level()
        } else {
            None
        }
    }

    fn eval(&mut self, state: &RunLengthState<VecCell>) -> TruncPoly<C> {
        let len = state.len();
        if len <= 1 {
            return TruncPoly::one(self.cap);
        }
        if let Some(p) = self.memo.get(state) {
            return p.clone();
        }
        let cells = state.expand();
        let mut acc = TruncPoly::zero(self.cap);
        let mut prefix_sum: u64 = 0;
        for i in 1..=len {
            let pivot0 = cells[i - 1][0] as u64;
            let pre = match self.prefactor {
                PrefactorRule::PrefixSum => prefix_sum,
                PrefactorRule::RemainingPower => (len - i) as u64 * pivot0,
            };
            prefix_sum += pivot0;
            if let Cap::Finite(r) = self.cap {
                if pre > r as u64 {
                    match self.prefactor {
                        // prefix sums only grow with the pivot
                        PrefactorRule::PrefixSum => break,
                        PrefactorRule::RemainingPower => continue,
                    }
                }
            }
            let child = step_cells(&cells, i, self.tiers, self.sat_level());
            let sub = self.eval(&child);
            let q_exp = if C::TRACKS_Q { (i - 1) as u64 } else { 0 };
            acc.add_shifted(&sub, pre as usize, q_exp);
        }
        if self.memo_limit.is_none_or(|lim| self.memo.len() < lim) {
            self.memo.insert(state.clone(), acc.clone());
        }
        acc
    }
}

/// One branch of the first-element-removal recursion on expanded cells.
///
/// Positions before the pivot keep their exponents; every later position
/// shifts down one slot and each tier picks up the pivot's next-tier
/// exponent (the completed partial patterns), the top tier picking up 1.
/// Exponents clamp at `sat` when given.
pub(crate) fn step_cells(
    cells: &[VecCell],
    pivot: usize,
    tiers: usize,
    sat: Option<u32>,
) -> RunLengthState<VecCell> {
    debug_assert!((1..=cells.len()).contains(&pivot));
    let pivot_cell = cells[pivot - 1];
    let mut out = Vec::with_capacity(cells.len() - 1);
    out.extend_from_slice(&cells[..pivot - 1]);
    for &cell in &cells[pivot..] {
        let mut c = cell;
        for m in 0..tiers {
            let add = if m + 1 < tiers { pivot_cell[m + 1] } else { 1 };
            c[m] = c[m].saturating_add(add);
            if let Some(s) = sat {
                c[m] = c[m].min(s);
            }
        }
        out.push(c);
    }
    RunLengthState::from_cells(&out)
}

/// Clamp every exponent at `r + 1`, re-merging runs.
pub(crate) fn collapse_cells(cells: &[VecCell], r: usize) -> RunLengthState<VecCell> {
    let level = r as u32 + 1;
    let clamped: Vec<VecCell> = cells
        .iter()
        .map(|cell| {
            let mut c = *cell;
            for e in &mut c {
                *e = (*e).min(level);
            }
            c
        })
        .collect();
    RunLengthState::from_cells(&clamped)
}
