//! Exhaustive brute-force distribution oracle.
//!
//! Scans all of `S_n` and tallies the joint occurrence-count vector of one
//! or more patterns (optionally refined by the inversion number). Every
//! engine in this crate is cross-validated against this scan at small `n`;
//! the oracle's job is correctness, not speed.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{count_occurrences, inversions, Permutation};
use crate::poly::{BiTruncPoly, Cap, QPoly, TruncPoly};

/// Default refusal threshold: scanning beyond 10! permutations is rarely an
/// accident anyone wants.
pub const DEFAULT_ORACLE_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug)]
pub struct OracleOptions {
    pub limit: usize,
    pub track_inversions: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            limit: DEFAULT_ORACLE_LIMIT,
            track_inversions: false,
        }
    }
}

/// The polynomial `sum over S_n of t_1^(N_tau1) ... t_m^(N_taum) [* q^inv]`
/// in sparse form: exponent vectors mapped to exact counts.
///
/// Keys list one exponent per pattern, in the order the patterns were given,
/// with the inversion exponent appended last when tracked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointDistribution {
    taus: Vec<Permutation>,
    track_inversions: bool,
    n: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

/// First coefficient disagreement between an engine run and the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    /// Exponent vector of the offending term (same key layout as the
    /// distribution that produced it).
    pub exponents: Vec<u32>,
    pub engine: BigInt,
    pub oracle: BigInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n = {}: coefficient at {:?} is {} from the engine but {} from the oracle",
            self.n, self.exponents, self.engine, self.oracle
        )
    }
}

/// Tally the joint occurrence distribution over all of `S_n`.
///
/// Refuses `n` above `opts.limit`. `S_0` contributes the single empty
/// permutation, so the result for `n = 0` is the constant 1.
pub fn brute_force_distribution(
    n: usize,
    taus: &[Permutation],
    opts: &OracleOptions,
) -> Result<JointDistribution> {
    assert!(!taus.is_empty(), "oracle needs at least one pattern");
    if n > opts.limit {
        return Err(Error::OracleLimit { n, limit: opts.limit });
    }
    let track = opts.track_inversions;

    let merge = |mut a: BTreeMap<Vec<u32>, u64>, b: BTreeMap<Vec<u32>, u64>| {
        for (k, v) in b {
            *a.entry(k).or_insert(0) += v;
        }
        a
    };

    let terms: BTreeMap<Vec<u32>, u64> = if n >= 9 {
        // split on the first entry; merging is commutative, so the result
        // is identical no matter how rayon schedules the blocks
        (1..=n as u32)
            .into_par_iter()
            .map(|first| scan_block(n, Some(first), taus, track))
            .reduce(BTreeMap::new, merge)
    } else {
        scan_block(n, None, taus, track)
    };

    Ok(JointDistribution {
        taus: taus.to_vec(),
        track_inversions: track,
        n,
        terms: terms
            .into_iter()
            .map(|(k, v)| (k, BigInt::from(v)))
            .collect(),
    })
}

fn scan_block(
    n: usize,
    first: Option<u32>,
    taus: &[Permutation],
    track: bool,
) -> BTreeMap<Vec<u32>, u64> {
    let mut tally = BTreeMap::new();
    let mut record = |perm: &[u32]| {
        let pi = Permutation::from_vec_unchecked(perm.to_vec());
        let mut key: Vec<u32> = taus
            .iter()
            .map(|tau| count_occurrences(&pi, tau) as u32)
            .collect();
        if track {
            key.push(inversions(&pi) as u32);
        }
        *tally.entry(key).or_insert(0) += 1;
    };

    match first {
        None => {
            let mut values: Vec<u32> = (1..=n as u32).collect();
            for_each_permutation(&mut values, &mut record);
        }
        Some(v) => {
            let mut buf: Vec<u32> = Vec::with_capacity(n);
            buf.push(v);
            buf.extend((1..=n as u32).filter(|&u| u != v));
            let mut apply = |rest: &[u32]| {
                let mut full = Vec::with_capacity(n);
                full.push(v);
                full.extend_from_slice(rest);
                record(&full);
            };
            let mut rest = buf.split_off(1);
            for_each_permutation(&mut rest, &mut apply);
        }
    }
    tally
}

/// Heap's algorithm; visits every arrangement of `values` exactly once.
fn for_each_permutation(values: &mut [u32], f: &mut impl FnMut(&[u32])) {
    let n = values.len();
    if n == 0 {
        f(values);
        return;
    }
    let mut c = vec![0usize; n];
    f(values);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                values.swap(0, i);
            } else {
                values.swap(c[i], i);
            }
            f(values);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

impl JointDistribution {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.taus
    }

    pub fn tracks_inversions(&self) -> bool {
        self.track_inversions
    }

    /// Exact coefficient of the given exponent vector.
    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Sum of all coefficients; always `n!`.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Single-pattern view as a truncated polynomial in `t`.
    pub fn to_trunc_poly(&self, cap: Cap) -> TruncPoly<BigInt> {
        assert_eq!(self.taus.len(), 1, "single-pattern view of a joint scan");
        assert!(!self.track_inversions, "use to_trunc_qpoly for q-refined scans");
        let mut p = TruncPoly::zero(cap);
        for (key, c) in &self.terms {
            p.add_term(key[0] as usize, c);
        }
        p
    }

    /// Single-pattern q-refined view: coefficients are polynomials in `q`.
    pub fn to_trunc_qpoly(&self, cap: Cap) -> TruncPoly<QPoly> {
        assert_eq!(self.taus.len(), 1, "single-pattern view of a joint scan");
        assert!(self.track_inversions, "scan did not record inversions");
        let mut p = TruncPoly::zero(cap);
        for (key, c) in &self.terms {
            let mono = QPoly::monomial(c.clone(), key[1] as usize);
            p.add_term(key[0] as usize, &mono);
        }
        p
    }

    /// Two-pattern view: first pattern on `s`, second on `t`.
    pub fn to_bi_poly(&self, s_cap: Cap, t_cap: Cap) -> BiTruncPoly<BigInt> {
        assert_eq!(self.taus.len(), 2, "two-pattern view of a joint scan");
        assert!(!self.track_inversions, "use to_bi_qpoly for q-refined scans");
        let mut p = BiTruncPoly::zero(s_cap, t_cap);
        for (key, c) in &self.terms {
            p.add_term(key[0] as usize, key[1] as usize, c);
        }
        p
    }

    /// Two-pattern q-refined view.
    pub fn to_bi_qpoly(&self, s_cap: Cap, t_cap: Cap) -> BiTruncPoly<QPoly> {
        assert_eq!(self.taus.len(), 2, "two-pattern view of a joint scan");
        assert!(self.track_inversions, "scan did not record inversions");
        let mut p = BiTruncPoly::zero(s_cap, t_cap);
        for (key, c) in &self.terms {
            let mono = QPoly::monomial(c.clone(), key[2] as usize);
            p.add_term(key[0] as usize, key[1] as usize, &mono);
        }
        p
    }
}

/// Locate the lowest-degree coefficient where two polynomials disagree.
pub fn first_mismatch(
    n: usize,
    engine: &TruncPoly<BigInt>,
    oracle: &TruncPoly<BigInt>,
) -> Option<Mismatch> {
    let top = engine
        .degree()
        .unwrap_or(0)
        .max(oracle.degree().unwrap_or(0));
    for deg in 0..=top {
        let a = engine.coeff(deg);
        let b = oracle.coeff(deg);
        if a != b {
            return Some(Mismatch {
                n,
                exponents: vec![deg as u32],
                engine: a,
                oracle: b,
            });
        }
    }
    None
}

/// q-refined analog of [`first_mismatch`]; exponents are `[t_deg, q_deg]`.
pub fn first_mismatch_q(
    n: usize,
    engine: &TruncPoly<QPoly>,
    oracle: &TruncPoly<QPoly>,
) -> Option<Mismatch> {
    let top = engine
        .degree()
        .unwrap_or(0)
        .max(oracle.degree().unwrap_or(0));
    for deg in 0..=top {
        let a = engine.coeff(deg);
        let b = oracle.coeff(deg);
        if a != b {
            let q_top = a.degree().unwrap_or(0).max(b.degree().unwrap_or(0));
            for q_deg in 0..=q_top {
                if a.coeff(q_deg) != b.coeff(q_deg) {
                    return Some(Mismatch {
                        n,
                        exponents: vec![deg as u32, q_deg as u32],
                        engine: a.coeff(q_deg),
                        oracle: b.coeff(q_deg),
                    });
                }
            }
        }
    }
    None
}

/// Two-variable analog of [`first_mismatch`]; exponents are `[s_deg, t_deg]`.
pub fn first_mismatch_bi(
    n: usize,
    engine: &BiTruncPoly<BigInt>,
    oracle: &BiTruncPoly<BigInt>,
) -> Option<Mismatch> {
    let s_top = engine.rows().len().max(oracle.rows().len());
    for a in 0..s_top {
        let t_top = |p: &BiTruncPoly<BigInt>| {
            p.rows().get(a).and_then(TruncPoly::degree).unwrap_or(0)
        };
        for b in 0..=t_top(engine).max(t_top(oracle)) {
            let x = engine.coeff(a, b);
            let y = oracle.coeff(a, b);
            if x != y {
                return Some(Mismatch {
                    n,
                    exponents: vec![a as u32, b as u32],
                    engine: x,
                    oracle: y,
                });
            }
        }
    }
    None
}

impl fmt::Display for JointDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.taus.len();
        let mut first = true;
        for (key, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts: Vec<String> = Vec::new();
            for (j, &e) in key.iter().enumerate() {
                let name = if j < m {
                    if m == 1 {
                        "t".to_string()
                    } else {
                        format!("t{}", j + 1)
                    }
                } else {
                    "q".to_string()
                };
                match e {
                    0 => {}
                    1 => parts.push(name),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            if parts.is_empty() {
                write!(f, "{c}")?;
            } else if num_traits::One::is_one(c) {
                write!(f, "{}", parts.join("*"))?;
            } else {
                write!(f, "{}*{}", c, parts.join("*"))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::PatternSpec;

    fn dist(n: usize, taus: &[&str]) -> JointDistribution {
        let taus: Vec<Permutation> = taus.iter().map(|s| s.parse().unwrap()).collect();
        brute_force_distribution(n, &taus, &OracleOptions::default()).unwrap()
    }

    #[test]
    fn s3_against_123() {
        let d = dist(3, &["1 2 3"]);
        assert_eq!(d.coeff(&[0]), BigInt::from(5));
        assert_eq!(d.coeff(&[1]), BigInt::from(1));
        assert_eq!(d.total(), BigInt::from(6));
        assert_eq!(d.to_string(), "5 + t");
    }

    #[test]
    fn empty_permutation_has_weight_one() {
        let d = dist(0, &["1 3 2"]);
        assert_eq!(d.coeff(&[0]), BigInt::from(1));
        assert_eq!(d.total(), BigInt::from(1));
    }

    #[test]
    fn totals_are_factorials() {
        let mut expected = BigInt::from(1);
        for n in 1..=7usize {
            expected *= n;
            assert_eq!(dist(n, &["1 3 2"]).total(), expected, "n = {n}");
        }
    }

    #[test]
    fn oracle_refuses_above_limit() {
        let taus = vec![Permutation::identity(3)];
        let err = brute_force_distribution(11, &taus, &OracleOptions::default()).unwrap_err();
        assert!(matches!(err, Error::OracleLimit { n: 11, limit: 10 }));
        assert!(err.to_string().contains("limit is 10"));
    }

    #[test]
    fn reversal_symmetry_132_vs_231() {
        // N_132(pi) = N_231(reverse(pi)) term by term
        for n in 0..=6 {
            let a = dist(n, &["1 3 2"]);
            let b = dist(n, &["2 3 1"]);
            assert_eq!(a.terms, b.terms, "n = {n}");
        }
    }

    #[test]
    fn explicit_pattern_1432_matches_2341() {
        let fourthree = PatternSpec::Explicit("1 4 3 2".parse().unwrap());
        for n in 0..=6 {
            let a = dist(n, &["2 3 4 1"]);
            let b = brute_force_distribution(
                n,
                &[fourthree.pattern()],
                &OracleOptions::default(),
            )
            .unwrap();
            assert_eq!(a.terms, b.terms, "n = {n}");
        }
    }

    #[test]
    fn q_tracking_totals_match() {
        let taus = vec![Permutation::identity(3)];
        let opts = OracleOptions {
            track_inversions: true,
            ..Default::default()
        };
        let d = brute_force_distribution(4, &taus, &opts).unwrap();
        assert_eq!(d.total(), BigInt::from(24));
        // marginalizing out q recovers the plain distribution
        let plain = dist(4, &["1 2 3"]);
        let q = d.to_trunc_qpoly(Cap::Unbounded);
        assert_eq!(q.at_q_one(), plain.to_trunc_poly(Cap::Unbounded));
    }

    #[test]
    fn mismatch_reporting_names_degree() {
        let good = dist(5, &["1 3 2"]).to_trunc_poly(Cap::Unbounded);
        let mut bad = good.clone();
        bad.add_term(2, &BigInt::from(1));
        let m = first_mismatch(5, &bad, &good).unwrap();
        assert_eq!(m.n, 5);
        assert_eq!(m.exponents, vec![2]);
        assert_eq!(m.engine, m.oracle.clone() + 1);
        assert!(first_mismatch(5, &good, &good).is_none());
    }

    #[test]
    fn parallel_split_matches_sequential() {
        // n = 9 takes the rayon path; compare a couple of coefficients with
        // a straight n = 8-style scan result computed by summing over the
        // first entry manually is too slow here, so instead check internal
        // consistency: totals and the avoider count (Catalan number).
        let d = dist(9, &["1 3 2"]);
        assert_eq!(d.coeff(&[0]), BigInt::from(4862)); // Catalan(9)
        let mut fact = BigInt::from(1);
        for i in 1..=9 {
            fact *= i;
        }
        assert_eq!(d.total(), fact);
    }
}
