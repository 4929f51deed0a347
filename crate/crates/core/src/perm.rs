//! Permutations, pattern-occurrence counting, and weight monomials.
//!
//! A pattern `tau` of length `k` occurs in `pi` at every index subsequence
//! whose entries are order-isomorphic to `tau`; `count_occurrences` counts
//! those subsequences. The weight monomials attach, per value of `pi`, the
//! partial-occurrence statistics each engine tracks; they exist mainly so
//! tests can pin the engines' state semantics against direct counting.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation. Lengths 0 and 1 are valid.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    elems: Vec<u32>,
}

impl Permutation {
    /// Validates that `elems` is a bijection on `{1..n}`.
    pub fn new(elems: Vec<u32>) -> Result<Self> {
        let n = elems.len();
        let mut seen = vec![false; n];
        for &v in &elems {
            if v < 1 || v as usize > n {
                return Err(Error::NotAPermutation {
                    len: n,
                    reason: format!("value {v} out of range"),
                });
            }
            if seen[v as usize - 1] {
                return Err(Error::DuplicateEntry(v));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { elems })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            elems: (1..=n as u32).collect(),
        }
    }

    /// Caller guarantees `elems` is a permutation of `1..=n`; used by the
    /// oracle's exhaustive scan where validation per permutation would be
    /// wasted work.
    pub(crate) fn from_vec_unchecked(elems: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(elems.clone()).is_ok());
        Permutation { elems }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    /// Left-to-right reversal; occurrences of any pattern map bijectively
    /// onto occurrences of the reversed pattern.
    pub fn reverse(&self) -> Self {
        let mut elems = self.elems.clone();
        elems.reverse();
        Permutation { elems }
    }

    /// Parse the compact one-line digit form: "132" is the permutation
    /// (1, 3, 2). Only single-digit values can be written this way.
    pub fn from_digits(s: &str) -> Result<Self> {
        let elems = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| Error::Parse(format!("bad pattern digit {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Permutation::new(elems)
    }

    /// One-line digit form ("132") when every value is a single digit.
    pub fn digits(&self) -> Option<String> {
        if self.elems.iter().all(|&v| v <= 9) {
            Some(self.elems.iter().map(|v| v.to_string()).collect())
        } else {
            None
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.elems {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Parses one-line notation, comma- or space-separated ("2 5 1 4 3").
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .collect();
        let elems = parts
            .iter()
            .map(|p| {
                p.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {p:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Permutation::new(elems)
    }
}

/// The unique permutation order-isomorphic to a word of distinct integers.
pub fn reduce(word: &[u32]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| word[i]);
    let mut elems = vec![0u32; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        if rank > 0 && word[order[rank - 1]] == word[i] {
            return Err(Error::DuplicateEntry(word[i]));
        }
        elems[i] = rank as u32 + 1;
    }
    Ok(Permutation { elems })
}

/// Number of index subsequences of `pi` whose reduction equals `tau`.
///
/// Depth-first enumeration over positions with order-consistency pruning;
/// `O(n^k)` in the worst case, which is fine at oracle scale.
pub fn count_occurrences(pi: &Permutation, tau: &Permutation) -> u64 {
    let k = tau.len();
    if k == 0 {
        return 1;
    }
    if k > pi.len() {
        return 0;
    }
    let mut chosen: Vec<u32> = Vec::with_capacity(k);
    count_from(pi.elems(), tau.elems(), &mut chosen, 0)
}

fn count_from(pi: &[u32], tau: &[u32], chosen: &mut Vec<u32>, start: usize) -> u64 {
    let depth = chosen.len();
    if depth == tau.len() {
        return 1;
    }
    let remaining = tau.len() - depth;
    let mut total = 0;
    // enough suffix must remain to finish the pattern
    for pos in start..=pi.len() - remaining {
        let v = pi[pos];
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(j, &u)| (u < v) == (tau[j] < tau[depth]));
        if consistent {
            chosen.push(v);
            total += count_from(pi, tau, chosen, pos + 1);
            chosen.pop();
        }
    }
    total
}

/// Number of pairs `i < j` with `pi_i > pi_j` (occurrences of 21).
pub fn inversions(pi: &Permutation) -> u64 {
    let e = pi.elems();
    let mut count = 0;
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            if e[i] > e[j] {
                count += 1;
            }
        }
    }
    count
}

/// The pattern families the engines understand.
///
/// `Increasing(k)` is `1 2 .. k`, `TailSwap(k)` is `1 2 .. (k-2) k (k-1)`,
/// `Cycle(k)` is `2 3 .. k 1`. `Explicit` patterns are for oracle use only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternSpec {
    Increasing(usize),
    TailSwap(usize),
    Cycle(usize),
    Explicit(Permutation),
}

impl PatternSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            PatternSpec::Increasing(k) if *k >= 2 => Ok(()),
            PatternSpec::TailSwap(k) if *k >= 3 => Ok(()),
            PatternSpec::Cycle(k) if *k >= 3 => Ok(()),
            PatternSpec::Explicit(_) => Ok(()),
            other => Err(Error::UnsupportedFamily(format!("{other:?}"))),
        }
    }

    /// Materialize the pattern permutation.
    pub fn pattern(&self) -> Permutation {
        match self {
            PatternSpec::Increasing(k) => Permutation::identity(*k),
            PatternSpec::TailSwap(k) => {
                let mut elems: Vec<u32> = (1..=*k as u32 - 2).collect();
                elems.push(*k as u32);
                elems.push(*k as u32 - 1);
                Permutation { elems }
            }
            PatternSpec::Cycle(k) => {
                let mut elems: Vec<u32> = (2..=*k as u32).collect();
                elems.push(1);
                Permutation { elems }
            }
            PatternSpec::Explicit(p) => p.clone(),
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.pattern();
        match p.digits() {
            Some(d) => write!(f, "{d}"),
            None => write!(f, "{p}"),
        }
    }
}

/// Identifier of one catalytic variable inside a [`WeightMonomial`].
///
/// `Vec { tier, index }` is a per-value variable (tier 0 = x, 1 = y, 2 = z);
/// `Mat { tier, row, col }` is a matrix variable (tier 0 = x, 1 = y).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum WeightVar {
    Vec { tier: u8, index: u32 },
    Mat { tier: u8, row: u32, col: u32 },
}

/// `t^(occurrence count)` times a product of catalytic variables recording
/// partial occurrences. Absent variables have exponent 0.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightMonomial {
    pub t_exponent: u64,
    pub var_exponents: BTreeMap<WeightVar, u64>,
}

impl WeightMonomial {
    fn bump(&mut self, var: WeightVar) {
        *self.var_exponents.entry(var).or_insert(0) += 1;
    }

    pub fn var_exponent(&self, var: WeightVar) -> u64 {
        self.var_exponents.get(&var).copied().unwrap_or(0)
    }
}

impl fmt::Display for WeightMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{}", self.t_exponent)?;
        for (var, e) in &self.var_exponents {
            match var {
                WeightVar::Vec { tier, index } => {
                    write!(f, " * {}{index}^{e}", tier_name(*tier))?;
                }
                WeightVar::Mat { tier, row, col } => {
                    write!(f, " * {}[{row},{col}]^{e}", tier_name(*tier))?;
                }
            }
        }
        Ok(())
    }
}

fn tier_name(tier: u8) -> char {
    match tier {
        0 => 'x',
        1 => 'y',
        _ => 'z',
    }
}

/// The exact weight monomial of `pi` for one of the supported families.
///
/// Per-value statistics, indexed by the value `i` written below as the
/// distinguished entry of the partial pattern:
///
/// * `TailSwap(3)` (132): `x_i` counts 21-pairs whose bottom is `i`.
/// * `TailSwap(4)` (1243): adds `y_i` = 132-triples whose "1" is `i`.
/// * `TailSwap(5)` (12354): adds `z_i` = 1243-quadruples whose "1" is `i`.
/// * `Increasing(3)` (123): `x_i` counts 12-pairs whose bottom is `i`.
/// * `Increasing(4)` (1234): adds `y_i` = 123-triples whose "1" is `i`.
/// * `Cycle(3)` (231): `x[i,j]` counts 21-pairs with top value `i` and
///   bottom value below `j`, for `j <= i`.
/// * `Cycle(4)` (2341): adds `y[i,j]` = 231-triples with "2" equal to `i`
///   and "1" below `j`.
pub fn weight_monomial(pi: &Permutation, family: &PatternSpec) -> Result<WeightMonomial> {
    family.validate()?;
    let tiers = match family {
        PatternSpec::TailSwap(k @ 3..=5) | PatternSpec::Increasing(k @ 3..=4) => k - 2,
        PatternSpec::Cycle(k @ 3..=4) => k - 2,
        other => return Err(Error::UnsupportedFamily(other.to_string())),
    };
    let e = pi.elems();
    let n = e.len();
    let mut w = WeightMonomial {
        t_exponent: count_occurrences(pi, &family.pattern()),
        var_exponents: BTreeMap::new(),
    };
    match family {
        PatternSpec::TailSwap(_) => {
            // descending chains pi_a > pi_b = i (tier 0), then each extra
            // tier prepends a smaller earlier entry: pi_a = i below the pair
            for b in 0..n {
                for a in 0..b {
                    if e[a] > e[b] {
                        w.bump(WeightVar::Vec { tier: 0, index: e[b] });
                    }
                }
            }
            if tiers >= 2 {
                // 132-triples indexed by their "1" value
                for a in 0..n {
                    for b in a + 1..n {
                        for c in b + 1..n {
                            if e[a] < e[c] && e[c] < e[b] {
                                w.bump(WeightVar::Vec { tier: 1, index: e[a] });
                            }
                        }
                    }
                }
            }
            if tiers >= 3 {
                // 1243-quadruples indexed by their "1" value
                for a in 0..n {
                    for b in a + 1..n {
                        for c in b + 1..n {
                            for d in c + 1..n {
                                if e[a] < e[b] && e[b] < e[d] && e[d] < e[c] {
                                    w.bump(WeightVar::Vec { tier: 2, index: e[a] });
                                }
                            }
                        }
                    }
                }
            }
        }
        PatternSpec::Increasing(_) => {
            for a in 0..n {
                for b in a + 1..n {
                    if e[a] < e[b] {
                        w.bump(WeightVar::Vec { tier: 0, index: e[a] });
                    }
                }
            }
            if tiers >= 2 {
                for a in 0..n {
                    for b in a + 1..n {
                        for c in b + 1..n {
                            if e[a] < e[b] && e[b] < e[c] {
                                w.bump(WeightVar::Vec { tier: 1, index: e[a] });
                            }
                        }
                    }
                }
            }
        }
        PatternSpec::Cycle(_) => {
            for a in 0..n {
                for b in a + 1..n {
                    if e[a] > e[b] {
                        for j in e[b] + 1..=e[a] {
                            w.bump(WeightVar::Mat { tier: 0, row: e[a], col: j });
                        }
                    }
                }
            }
            if tiers >= 2 {
                for a in 0..n {
                    for b in a + 1..n {
                        for c in b + 1..n {
                            if e[c] < e[a] && e[a] < e[b] {
                                for j in e[c] + 1..=e[a] {
                                    w.bump(WeightVar::Mat { tier: 1, row: e[a], col: j });
                                }
                            }
                        }
                    }
                }
            }
        }
        PatternSpec::Explicit(_) => unreachable!("validated above"),
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&[7, 3, 5]).unwrap(), perm("3 1 2"));
        assert_eq!(reduce(&[1, 2, 3]).unwrap(), perm("1 2 3"));
        assert_eq!(reduce(&[5, 2, 1, 3, 4]).unwrap(), perm("5 2 1 3 4"));
        assert!(matches!(
            reduce(&[4, 4, 1]),
            Err(Error::DuplicateEntry(4))
        ));
        assert_eq!(reduce(&[]).unwrap(), Permutation::identity(0));
    }

    #[test]
    fn count_occurrences_examples() {
        assert_eq!(count_occurrences(&perm("5 3 4 1 2"), &perm("1 2 3")), 0);
        assert_eq!(count_occurrences(&perm("5 2 1 3 4"), &perm("1 2 3")), 2);
        assert_eq!(count_occurrences(&perm("2 5 1 4 3"), &perm("1 3 2")), 4);
        assert_eq!(
            count_occurrences(&perm("1 3 5 6 2 4"), &perm("1 2 4 3")),
            2
        );
        assert_eq!(
            count_occurrences(&perm("2 4 3 5 1"), &perm("2 3 4 1")),
            2
        );
        // pattern longer than the permutation
        assert_eq!(count_occurrences(&perm("2 1"), &perm("1 2 3")), 0);
        // empty pattern occurs once
        assert_eq!(count_occurrences(&perm("2 1"), &Permutation::identity(0)), 1);
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(inversions(&Permutation::identity(5)), 0);
        assert_eq!(inversions(&perm("2 1")), 1);
        assert_eq!(inversions(&perm("2 5 1 4 3")), 5);
        assert_eq!(
            inversions(&perm("2 5 1 4 3")),
            count_occurrences(&perm("2 5 1 4 3"), &perm("2 1"))
        );
    }

    #[test]
    fn pattern_spec_materialization() {
        assert_eq!(PatternSpec::TailSwap(3).pattern(), perm("1 3 2"));
        assert_eq!(PatternSpec::TailSwap(4).pattern(), perm("1 2 4 3"));
        assert_eq!(PatternSpec::TailSwap(5).pattern(), perm("1 2 3 5 4"));
        assert_eq!(PatternSpec::Cycle(3).pattern(), perm("2 3 1"));
        assert_eq!(PatternSpec::Cycle(4).pattern(), perm("2 3 4 1"));
        assert_eq!(PatternSpec::Increasing(4).pattern(), perm("1 2 3 4"));
        assert_eq!(PatternSpec::Cycle(4).pattern().reverse(), perm("1 4 3 2"));
    }

    #[test]
    fn weight_132_examples() {
        let w = weight_monomial(&perm("1 3 2 4 5"), &PatternSpec::TailSwap(3)).unwrap();
        assert_eq!(w.t_exponent, 1);
        assert_eq!(w.var_exponent(WeightVar::Vec { tier: 0, index: 2 }), 1);
        assert_eq!(w.var_exponents.len(), 1);

        let w = weight_monomial(&perm("2 5 1 4 3"), &PatternSpec::TailSwap(3)).unwrap();
        assert_eq!(w.t_exponent, 4);
        assert_eq!(w.var_exponent(WeightVar::Vec { tier: 0, index: 1 }), 2);
        assert_eq!(w.var_exponent(WeightVar::Vec { tier: 0, index: 3 }), 2);
        assert_eq!(w.var_exponent(WeightVar::Vec { tier: 0, index: 4 }), 1);
    }

    #[test]
    fn weight_1243_examples() {
        let w = weight_monomial(&Permutation::identity(6), &PatternSpec::TailSwap(4)).unwrap();
        assert_eq!(w.t_exponent, 0);
        assert!(w.var_exponents.is_empty());

        let w = weight_monomial(&perm("1 3 5 6 2 4"), &PatternSpec::TailSwap(4)).unwrap();
        assert_eq!(w.t_exponent, 2);
        assert_eq!(w.var_exponent(WeightVar::Vec { tier: 0, index: 2 }), 3);
        assert_eq!(w.var_exponent(WeightVar::Vec { tier: 0, index: 4 }), 2);
        assert_eq!(w.var_exponent(WeightVar::Vec { tier: 1, index: 1 }), 5);
        assert_eq!(w.var_exponent(WeightVar::Vec { tier: 1, index: 3 }), 2);
        assert_eq!(w.var_exponents.len(), 4);
    }

    #[test]
    fn weight_231_example() {
        let w = weight_monomial(&perm("2 4 1 5 3"), &PatternSpec::Cycle(3)).unwrap();
        assert_eq!(w.t_exponent, 2);
        let m = |row, col| WeightVar::Mat { tier: 0, row, col };
        assert_eq!(w.var_exponent(m(2, 2)), 1);
        assert_eq!(w.var_exponent(m(4, 2)), 1);
        assert_eq!(w.var_exponent(m(4, 3)), 1);
        assert_eq!(w.var_exponent(m(4, 4)), 2);
        assert_eq!(w.var_exponent(m(5, 4)), 1);
        assert_eq!(w.var_exponent(m(5, 5)), 1);
        assert_eq!(w.var_exponents.values().sum::<u64>(), 7);
    }

    #[test]
    fn weight_2341_example() {
        let w = weight_monomial(&perm("2 4 3 5 1"), &PatternSpec::Cycle(4)).unwrap();
        assert_eq!(w.t_exponent, 2);
        let x = |row, col| WeightVar::Mat { tier: 0, row, col };
        let y = |row, col| WeightVar::Mat { tier: 1, row, col };
        for (row, col, e) in [
            (2, 2, 1),
            (3, 2, 1),
            (3, 3, 1),
            (4, 2, 1),
            (4, 3, 1),
            (4, 4, 2),
            (5, 2, 1),
            (5, 3, 1),
            (5, 4, 1),
            (5, 5, 1),
        ] {
            assert_eq!(w.var_exponent(x(row, col)), e, "x[{row},{col}]");
        }
        for (row, col, e) in [(2, 2, 3), (3, 2, 1), (3, 3, 1), (4, 2, 1), (4, 3, 1), (4, 4, 1)] {
            assert_eq!(w.var_exponent(y(row, col)), e, "y[{row},{col}]");
        }
    }

    #[test]
    fn weight_rejects_unsupported_family() {
        assert!(weight_monomial(&perm("1 2"), &PatternSpec::Increasing(2)).is_err());
        assert!(weight_monomial(
            &perm("1 2"),
            &PatternSpec::Explicit(perm("1 4 3 2"))
        )
        .is_err());
        assert!(weight_monomial(&perm("1 2"), &PatternSpec::TailSwap(6)).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["2 5 1 4 3", "1", ""] {
            let p: Permutation = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        let comma: Permutation = "2,5,1,4,3".parse().unwrap();
        assert_eq!(comma, perm("2 5 1 4 3"));
        assert!("2 5 5".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
        assert!("2 x".parse::<Permutation>().is_err());
    }
}
