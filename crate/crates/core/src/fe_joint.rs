//! Joint distributions of two patterns: (123, 132) and (1234, 1243).
//!
//! Both pattern pairs close under the same first-element-removal recursion,
//! so one engine tracks them simultaneously: the increasing pattern counts
//! into `s`, the tail-swap pattern into `t`, each with its own tier chain
//! and its own truncation cap. A branch at pivot `i` on a length-`len`
//! state carries `s` to the power `(len - i) * <pivot's s-tier-0 exponent>`
//! (the ascent pairs the removed element starts) and `t` to the sum of
//! t-tier-0 exponents before the pivot (the descents it bottoms out).
//! Each chain promotes exactly like its single-pattern engine; the chains
//! never mix, so every cell splits into independent `s`- and `t`-side
//! scalars.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::poly::{BiTruncPoly, Cap, Coeff, QPoly};
use crate::tier::RunLengthState;

/// Per-position cell: `[s-tier0, s-tier1, t-tier0, t-tier1]`; single-tier
/// chains leave slot 1 (resp. 3) at zero.
pub type JointCell = [u32; 4];

/// Canonical joint state (run-length encoded, componentwise monotone).
pub type JointState = RunLengthState<JointCell>;

/// Memoized evaluator for a pattern pair at fixed `(s, t)` caps.
pub struct JointEngine<C: Coeff = BigInt> {
    s_tiers: usize,
    t_tiers: usize,
    s_cap: Cap,
    t_cap: Cap,
    saturate: bool,
    memo: HashMap<JointState, BiTruncPoly<C>>,
    memo_limit: Option<usize>,
}

impl<C: Coeff> JointEngine<C> {
    /// Tracks 123 into `s` and 132 into `t`.
    pub fn pair_123_132(s_cap: Cap, t_cap: Cap) -> Self {
        Self::new(1, 1, s_cap, t_cap)
    }

    /// Tracks 1234 into `s` and 1243 into `t`.
    pub fn pair_1234_1243(s_cap: Cap, t_cap: Cap) -> Self {
        Self::new(2, 2, s_cap, t_cap)
    }

    fn new(s_tiers: usize, t_tiers: usize, s_cap: Cap, t_cap: Cap) -> Self {
        JointEngine {
            s_tiers,
            t_tiers,
            s_cap,
            t_cap,
            saturate: true,
            memo: HashMap::new(),
            memo_limit: None,
        }
    }

    pub fn caps(&self) -> (Cap, Cap) {
        (self.s_cap, self.t_cap)
    }

    /// Bound the number of memoized states; evaluation falls back to
    /// recomputation beyond the bound (results are unchanged).
    pub fn set_memo_limit(&mut self, limit: Option<usize>) {
        self.memo_limit = limit;
    }

    /// Consistency-check hook: disable exponent collapsing.
    pub fn set_saturation(&mut self, on: bool) {
        self.saturate = on;
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Joint distribution over `S_n`, chopped at both caps.
    pub fn poly(&mut self, n: usize) -> BiTruncPoly<C> {
        let root = RunLengthState::uniform([0; 4], n);
        self.eval(&root)
    }

    fn sat_levels(&self) -> (Option<u32>, Option<u32>) {
        if self.saturate {
            (self.s_cap.saturation_level(), self.t_cap.saturation_level())
        } else {
            (None, None)
        }
    }

    fn eval(&mut self, state: &JointState) -> BiTruncPoly<C> {
        let len = state.len();
        if len <= 1 {
            return BiTruncPoly::one(self.s_cap, self.t_cap);
        }
        if let Some(p) = self.memo.get(state) {
            return p.clone();
        }
        let cells = state.expand();
        let mut acc = BiTruncPoly::zero(self.s_cap, self.t_cap);
        let mut t_prefix: u64 = 0; // sum of t-tier-0 exponents before the pivot
        for i in 1..=len {
            let pre_s = (len - i) as u64 * cells[i - 1][0] as u64;
            let pre_t = t_prefix;
            t_prefix += cells[i - 1][2] as u64;
            let s_dead = matches!(self.s_cap, Cap::Finite(r) if pre_s > r as u64);
            let t_dead = matches!(self.t_cap, Cap::Finite(r) if pre_t > r as u64);
            if s_dead || t_dead {
                continue;
            }
            let child = self.step(&cells, i);
            let sub = self.eval(&child);
            let q_exp = if C::TRACKS_Q { (i - 1) as u64 } else { 0 };
            acc.add_shifted(&sub, pre_s as usize, pre_t as usize, q_exp);
        }
        if self.memo_limit.is_none_or(|lim| self.memo.len() < lim) {
            self.memo.insert(state.clone(), acc.clone());
        }
        acc
    }

    fn step(&self, cells: &[JointCell], pivot: usize) -> JointState {
        let (s_sat, t_sat) = self.sat_levels();
        let pivot_cell = cells[pivot - 1];
        let mut out = Vec::with_capacity(cells.len() - 1);
        out.extend_from_slice(&cells[..pivot - 1]);
        for &cell in &cells[pivot..] {
            let mut c = cell;
            for m in 0..self.s_tiers {
                let add = if m + 1 < self.s_tiers { pivot_cell[m + 1] } else { 1 };
                c[m] = c[m].saturating_add(add);
                if let Some(s) = s_sat {
                    c[m] = c[m].min(s);
                }
            }
            for m in 0..self.t_tiers {
                let add = if m + 1 < self.t_tiers { pivot_cell[2 + m + 1] } else { 1 };
                c[2 + m] = c[2 + m].saturating_add(add);
                if let Some(s) = t_sat {
                    c[2 + m] = c[2 + m].min(s);
                }
            }
            out.push(c);
        }
        RunLengthState::from_cells(&out)
    }
}

/// Joint (123, 132) distribution: the coefficient of `s^a t^b` counts the
/// permutations with `a` occurrences of 123 and `b` of 132.
pub fn evaluate_joint_123_132(n: usize, s_cap: Cap, t_cap: Cap) -> BiTruncPoly<BigInt> {
    JointEngine::pair_123_132(s_cap, t_cap).poly(n)
}

/// Joint (1234, 1243) distribution.
pub fn evaluate_joint_1234_1243(n: usize, s_cap: Cap, t_cap: Cap) -> BiTruncPoly<BigInt> {
    JointEngine::pair_1234_1243(s_cap, t_cap).poly(n)
}

/// Inversion-refined variants.
pub fn evaluate_joint_123_132_q(n: usize, s_cap: Cap, t_cap: Cap) -> BiTruncPoly<QPoly> {
    JointEngine::<QPoly>::pair_123_132(s_cap, t_cap).poly(n)
}

pub fn evaluate_joint_1234_1243_q(n: usize, s_cap: Cap, t_cap: Cap) -> BiTruncPoly<QPoly> {
    JointEngine::<QPoly>::pair_1234_1243(s_cap, t_cap).poly(n)
}
