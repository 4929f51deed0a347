//! Engines for the patterns `2 3 .. k 1`: 231 and 2341.
//!
//! Removing the first element (value `i`) of a permutation completes a 231
//! for every tracked 21-pair whose top lies above `i` and whose bottom lies
//! below `i`, so the per-value statistics need a second index: how far below
//! the top the bottom sits. The states are therefore indexed by value pairs.
//!
//! For 231 the starting all-ones matrix keeps identical rows under the
//! merge operator, so a single exponent vector `e_1..e_n` suffices
//! ([`r1_merge`]). For 2341 the promoted tier loses that symmetry and the
//! state is a lower-triangular exponent matrix plus the vector
//! ([`r2_merge`]). Exponents collapse at `r + 1` in truncated mode: merges
//! only ever add exponents, and a collapsed exponent can only feed branches
//! that the cap kills anyway.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Cap, Coeff, QPoly, TruncPoly};

/// Exponent vector state for the 231 recursion (`e_j` is the power of `t`
/// sitting at value slot `j`).
pub type CycleVecState = Vec<u32>;

/// Lower-triangular exponent matrix, row-major: row `b` holds columns
/// `1..=b`. Entries above the diagonal do not exist.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LowerTriangle {
    size: usize,
    entries: Vec<u32>,
}

impl LowerTriangle {
    pub fn zeros(size: usize) -> Self {
        LowerTriangle {
            size,
            entries: vec![0; size * (size + 1) / 2],
        }
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * (size + 1) / 2);
        for (b, row) in rows.iter().enumerate() {
            if row.len() != b + 1 {
                return Err(Error::Parse(format!(
                    "triangle row {} must have {} entries, got {}",
                    b + 1,
                    b + 1,
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        Ok(LowerTriangle { size, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry at 1-based `(row, col)` with `col <= row`.
    pub fn get(&self, row: usize, col: usize) -> u32 {
        debug_assert!(1 <= col && col <= row && row <= self.size);
        self.entries[row * (row - 1) / 2 + col - 1]
    }

    fn row(&self, row: usize) -> &[u32] {
        let start = row * (row - 1) / 2;
        &self.entries[start..start + row]
    }
}

/// State of the 2341 recursion: exponent triangle plus the merge vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleMatState {
    pub cmat: LowerTriangle,
    pub dvec: CycleVecState,
}

impl CycleMatState {
    pub fn all_zero(n: usize) -> Self {
        CycleMatState {
            cmat: LowerTriangle::zeros(n),
            dvec: vec![0; n],
        }
    }
}

/// Row-delete / column-merge step on an exponent vector.
///
/// For `i < n` the entries at `i` and `i + 1` merge into `e_i + e_(i+1) + 1`;
/// for `i = n` the last entry is dropped.
pub fn r1_merge(exps: &[u32], i: usize) -> Result<CycleVecState> {
    let n = exps.len();
    if i < 1 || i > n {
        return Err(Error::Parse(format!("position {i} out of range 1..={n}")));
    }
    let mut out = Vec::with_capacity(n - 1);
    out.extend_from_slice(&exps[..i - 1]);
    if i < n {
        out.push(exps[i - 1] + exps[i] + 1);
        out.extend_from_slice(&exps[i + 1..]);
    }
    Ok(out)
}

/// Row-delete / column-merge step on the exponent triangle.
///
/// Row `i` is deleted. Surviving rows above the pivot are untouched (their
/// merged column would sit above the diagonal). Rows below the pivot pick
/// up `d_c` at every column `c < i`, merge columns `i` and `i + 1` into
/// `c_(b,i) + c_(b,i+1) + d_i`, and shift later columns down. For `i = n`
/// the last row (and with it column `n`) is dropped.
pub fn r2_merge(cmat: &LowerTriangle, dvec: &[u32], i: usize) -> Result<LowerTriangle> {
    let n = cmat.size();
    if i < 1 || i > n {
        return Err(Error::Parse(format!("position {i} out of range 1..={n}")));
    }
    if dvec.len() != n {
        return Err(Error::Parse(format!(
            "d-vector length {} does not match triangle size {n}",
            dvec.len()
        )));
    }
    let mut entries = Vec::with_capacity(n.saturating_sub(1) * n / 2);
    for b in 1..n {
        if b < i {
            entries.extend_from_slice(cmat.row(b));
        } else {
            let old = b + 1; // original row index below the pivot
            for c in 1..=b {
                let e = if c < i {
                    cmat.get(old, c) + dvec[c - 1]
                } else if c == i {
                    cmat.get(old, i) + cmat.get(old, i + 1) + dvec[i - 1]
                } else {
                    cmat.get(old, c + 1)
                };
                entries.push(e);
            }
        }
    }
    Ok(LowerTriangle {
        size: n - 1,
        entries,
    })
}

fn clamp(exps: &mut [u32], sat: Option<u32>) {
    if let Some(s) = sat {
        for e in exps {
            *e = (*e).min(s);
        }
    }
}

/// Canonical byte serialization of exponent slices, the memo key form.
///
/// One width-tag byte, then every exponent in one or four little-endian
/// bytes. The state length is recoverable from the byte count, so the
/// encoding is injective; narrow states always use the narrow width, so it
/// is canonical. Keys for the 2341 engine concatenate triangle and vector
/// (the combined entry count determines the split).
fn encode_key(parts: &[&[u32]]) -> Box<[u8]> {
    let count: usize = parts.iter().map(|p| p.len()).sum();
    let wide = parts.iter().any(|p| p.iter().any(|&e| e > u8::MAX as u32));
    let mut out = Vec::with_capacity(1 + count * if wide { 4 } else { 1 });
    out.push(wide as u8);
    for part in parts {
        for &e in *part {
            if wide {
                out.extend_from_slice(&e.to_le_bytes());
            } else {
                out.push(e as u8);
            }
        }
    }
    out.into_boxed_slice()
}

/// Memoized evaluator for the pattern 231 at a fixed cap.
pub struct CycleVecEngine<C: Coeff = BigInt> {
    cap: Cap,
    saturate: bool,
    memo: HashMap<Box<[u8]>, TruncPoly<C>>,
    memo_limit: Option<usize>,
}

impl<C: Coeff> CycleVecEngine<C> {
    pub fn new(cap: Cap) -> Self {
        CycleVecEngine {
            cap,
            saturate: true,
            memo: HashMap::new(),
            memo_limit: None,
        }
    }

    pub fn cap(&self) -> Cap {
        self.cap
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

    pub fn poly(&mut self, n: usize) -> TruncPoly<C> {
        self.eval(&vec![0; n])
    }

    fn sat_level(&self) -> Option<u32> {
        if self.saturate {
            self.cap.saturation_level()
        } else {
            None
        }
    }

    fn eval(&mut self, state: &CycleVecState) -> TruncPoly<C> {
        let len = state.len();
        if len <= 1 {
            return TruncPoly::one(self.cap);
        }
        let key = encode_key(&[state]);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let mut acc = TruncPoly::zero(self.cap);
        let mut weighted: u64 = 0; // sum of (j-1) * e_j over j <= i
        for i in 1..=len {
            weighted += (i - 1) as u64 * state[i - 1] as u64;
            if let Cap::Finite(r) = self.cap {
                if weighted > r as u64 {
                    // the prefactor only grows with the pivot
                    break;
                }
            }
            let mut child = r1_merge(state, i).expect("pivot in range");
            clamp(&mut child, self.sat_level());
            let sub = self.eval(&child);
            let q_exp = if C::TRACKS_Q { (i - 1) as u64 } else { 0 };
            acc.add_shifted(&sub, weighted as usize, q_exp);
        }
        if self.memo_limit.is_none_or(|lim| self.memo.len() < lim) {
            self.memo.insert(key, acc.clone());
        }
        acc
    }
}

/// Memoized evaluator for the pattern 2341 at a fixed cap.
pub struct CycleMatEngine<C: Coeff = BigInt> {
    cap: Cap,
    saturate: bool,
    memo: HashMap<Box<[u8]>, TruncPoly<C>>,
    memo_limit: Option<usize>,
}

impl<C: Coeff> CycleMatEngine<C> {
    pub fn new(cap: Cap) -> Self {
        CycleMatEngine {
            cap,
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

    pub fn set_saturation(&mut self, on: bool) {
        self.saturate = on;
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn poly(&mut self, n: usize) -> TruncPoly<C> {
        self.eval(&CycleMatState::all_zero(n))
    }

    fn sat_level(&self) -> Option<u32> {
        if self.saturate {
            self.cap.saturation_level()
        } else {
            None
        }
    }

    fn eval(&mut self, state: &CycleMatState) -> TruncPoly<C> {
        let len = state.dvec.len();
        if len <= 1 {
            return TruncPoly::one(self.cap);
        }
        let key = encode_key(&[&state.cmat.entries, &state.dvec]);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let mut acc = TruncPoly::zero(self.cap);
        for i in 1..=len {
            let mut pre: u64 = 0;
            for (j, &e) in state.cmat.row(i).iter().enumerate() {
                pre += j as u64 * e as u64;
                if let Cap::Finite(r) = self.cap {
                    if pre > r as u64 {
                        break;
                    }
                }
            }
            if let Cap::Finite(r) = self.cap {
                if pre > r as u64 {
                    continue;
                }
            }
            let sat = self.sat_level();
            let mut tri = r2_merge(&state.cmat, &state.dvec, i).expect("pivot in range");
            clamp(&mut tri.entries, sat);
            let mut d = r1_merge(&state.dvec, i).expect("pivot in range");
            clamp(&mut d, sat);
            let child = CycleMatState { cmat: tri, dvec: d };
            let sub = self.eval(&child);
            let q_exp = if C::TRACKS_Q { (i - 1) as u64 } else { 0 };
            acc.add_shifted(&sub, pre as usize, q_exp);
        }
        if self.memo_limit.is_none_or(|lim| self.memo.len() < lim) {
            self.memo.insert(key, acc.clone());
        }
        acc
    }
}

/// `f_n(t)` for the pattern 231, chopped at `cap`.
pub fn evaluate_231(n: usize, cap: Cap) -> TruncPoly<BigInt> {
    CycleVecEngine::new(cap).poly(n)
}

/// `f_n(t)` for the pattern 2341, chopped at `cap`.
pub fn evaluate_2341(n: usize, cap: Cap) -> TruncPoly<BigInt> {
    CycleMatEngine::new(cap).poly(n)
}

/// Inversion-refined variants.
pub fn evaluate_231_q(n: usize, cap: Cap) -> TruncPoly<QPoly> {
    CycleVecEngine::<QPoly>::new(cap).poly(n)
}

pub fn evaluate_2341_q(n: usize, cap: Cap) -> TruncPoly<QPoly> {
    CycleMatEngine::<QPoly>::new(cap).poly(n)
}
