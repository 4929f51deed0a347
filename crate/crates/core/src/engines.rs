//! Dispatch from pattern digit strings to the matching engine.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fe_cycle::{CycleMatEngine, CycleVecEngine};
use crate::fe_increasing::IncreasingEngine;
use crate::fe_joint::JointEngine;
use crate::fe_tailswap::TailSwapEngine;
use crate::perm::{PatternSpec, Permutation};
use crate::poly::{BiTruncPoly, Cap, Coeff, QPoly, TruncPoly};

/// The single-pattern engines, named by their pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EngineKind {
    Incr123,
    Incr1234,
    Tail132,
    Tail1243,
    Tail12354,
    Cycle231,
    Cycle2341,
}

impl EngineKind {
    pub const ALL: [EngineKind; 7] = [
        EngineKind::Incr123,
        EngineKind::Incr1234,
        EngineKind::Tail132,
        EngineKind::Tail1243,
        EngineKind::Tail12354,
        EngineKind::Cycle231,
        EngineKind::Cycle2341,
    ];

    /// Resolve a pattern digit string. "1432" resolves to the 2341 engine
    /// (its reversal) with the alias flag set.
    pub fn from_digits(digits: &str) -> Result<(EngineKind, bool)> {
        let kind = match digits {
            "123" => EngineKind::Incr123,
            "1234" => EngineKind::Incr1234,
            "132" => EngineKind::Tail132,
            "1243" => EngineKind::Tail1243,
            "12354" => EngineKind::Tail12354,
            "231" => EngineKind::Cycle231,
            "2341" => EngineKind::Cycle2341,
            "1432" => return Ok((EngineKind::Cycle2341, true)),
            other => {
                return Err(Error::UnsupportedFamily(format!(
                    "pattern {other:?} (supported: 123, 1234, 132, 1243, 12354, 231, 2341, \
                     and 1432 via the 2341 engine)"
                )))
            }
        };
        Ok((kind, false))
    }

    pub fn digits(&self) -> &'static str {
        match self {
            EngineKind::Incr123 => "123",
            EngineKind::Incr1234 => "1234",
            EngineKind::Tail132 => "132",
            EngineKind::Tail1243 => "1243",
            EngineKind::Tail12354 => "12354",
            EngineKind::Cycle231 => "231",
            EngineKind::Cycle2341 => "2341",
        }
    }

    /// Engine family name, for output metadata.
    pub fn family(&self) -> &'static str {
        match self {
            EngineKind::Incr123 | EngineKind::Incr1234 => "increasing",
            EngineKind::Tail132 | EngineKind::Tail1243 | EngineKind::Tail12354 => "tailswap",
            EngineKind::Cycle231 | EngineKind::Cycle2341 => "cycle",
        }
    }

    pub fn spec(&self) -> PatternSpec {
        match self {
            EngineKind::Incr123 => PatternSpec::Increasing(3),
            EngineKind::Incr1234 => PatternSpec::Increasing(4),
            EngineKind::Tail132 => PatternSpec::TailSwap(3),
            EngineKind::Tail1243 => PatternSpec::TailSwap(4),
            EngineKind::Tail12354 => PatternSpec::TailSwap(5),
            EngineKind::Cycle231 => PatternSpec::Cycle(3),
            EngineKind::Cycle2341 => PatternSpec::Cycle(4),
        }
    }

    pub fn pattern(&self) -> Permutation {
        self.spec().pattern()
    }

    /// A fresh evaluator at the given cap.
    pub fn evaluator<C: Coeff>(&self, cap: Cap) -> Evaluator<C> {
        match self {
            EngineKind::Incr123 => Evaluator::Increasing(IncreasingEngine::new(3, cap).unwrap()),
            EngineKind::Incr1234 => Evaluator::Increasing(IncreasingEngine::new(4, cap).unwrap()),
            EngineKind::Tail132 => Evaluator::TailSwap(TailSwapEngine::new(3, cap).unwrap()),
            EngineKind::Tail1243 => Evaluator::TailSwap(TailSwapEngine::new(4, cap).unwrap()),
            EngineKind::Tail12354 => Evaluator::TailSwap(TailSwapEngine::new(5, cap).unwrap()),
            EngineKind::Cycle231 => Evaluator::CycleVec(CycleVecEngine::new(cap)),
            EngineKind::Cycle2341 => Evaluator::CycleMat(CycleMatEngine::new(cap)),
        }
    }

    /// `f_n(t)` (one-shot; use [`EngineKind::evaluator`] for sequence runs).
    pub fn evaluate(&self, n: usize, cap: Cap) -> TruncPoly<BigInt> {
        self.evaluator(cap).poly(n)
    }

    pub fn evaluate_q(&self, n: usize, cap: Cap) -> TruncPoly<QPoly> {
        self.evaluator::<QPoly>(cap).poly(n)
    }

    /// `s_n(pattern, r)` for `n = 1..=n_max`, sharing the memo across `n`.
    pub fn sequence(&self, r: usize, n_max: usize, memo_limit: Option<usize>) -> Vec<BigInt> {
        let mut eval = self.evaluator::<BigInt>(Cap::Finite(r));
        eval.set_memo_limit(memo_limit);
        (1..=n_max).map(|n| eval.poly(n).coeff(r)).collect()
    }

    /// q-refined terms: the coefficient of `t^r` as a polynomial in `q`.
    pub fn sequence_q(&self, r: usize, n_max: usize, memo_limit: Option<usize>) -> Vec<QPoly> {
        let mut eval = self.evaluator::<QPoly>(Cap::Finite(r));
        eval.set_memo_limit(memo_limit);
        (1..=n_max).map(|n| eval.poly(n).coeff(r)).collect()
    }
}

/// A single-pattern evaluator of any family, memo retained across calls.
pub enum Evaluator<C: Coeff = BigInt> {
    TailSwap(TailSwapEngine<C>),
    Increasing(IncreasingEngine<C>),
    CycleVec(CycleVecEngine<C>),
    CycleMat(CycleMatEngine<C>),
}

impl<C: Coeff> Evaluator<C> {
    pub fn poly(&mut self, n: usize) -> TruncPoly<C> {
        match self {
            Evaluator::TailSwap(e) => e.poly(n),
            Evaluator::Increasing(e) => e.poly(n),
            Evaluator::CycleVec(e) => e.poly(n),
            Evaluator::CycleMat(e) => e.poly(n),
        }
    }

    pub fn set_memo_limit(&mut self, limit: Option<usize>) {
        match self {
            Evaluator::TailSwap(e) => e.set_memo_limit(limit),
            Evaluator::Increasing(e) => e.set_memo_limit(limit),
            Evaluator::CycleVec(e) => e.set_memo_limit(limit),
            Evaluator::CycleMat(e) => e.set_memo_limit(limit),
        }
    }
}

/// The joint two-pattern engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JointKind {
    Pair123And132,
    Pair1234And1243,
}

impl JointKind {
    pub const ALL: [JointKind; 2] = [JointKind::Pair123And132, JointKind::Pair1234And1243];

    /// Resolve a pattern pair such as `("123", "132")`.
    pub fn from_digit_pair(a: &str, b: &str) -> Result<JointKind> {
        match (a, b) {
            ("123", "132") => Ok(JointKind::Pair123And132),
            ("1234", "1243") => Ok(JointKind::Pair1234And1243),
            _ => Err(Error::UnsupportedFamily(format!(
                "pattern pair ({a:?}, {b:?}) (supported: (123, 132) and (1234, 1243))"
            ))),
        }
    }

    pub fn digit_pair(&self) -> (&'static str, &'static str) {
        match self {
            JointKind::Pair123And132 => ("123", "132"),
            JointKind::Pair1234And1243 => ("1234", "1243"),
        }
    }

    pub fn patterns(&self) -> [Permutation; 2] {
        let (a, b) = self.digit_pair();
        [
            Permutation::from_digits(a).expect("engine digits are permutations"),
            Permutation::from_digits(b).expect("engine digits are permutations"),
        ]
    }

    pub fn engine<C: Coeff>(&self, s_cap: Cap, t_cap: Cap) -> JointEngine<C> {
        match self {
            JointKind::Pair123And132 => JointEngine::pair_123_132(s_cap, t_cap),
            JointKind::Pair1234And1243 => JointEngine::pair_1234_1243(s_cap, t_cap),
        }
    }

    pub fn evaluate(&self, n: usize, s_cap: Cap, t_cap: Cap) -> BiTruncPoly<BigInt> {
        self.engine(s_cap, t_cap).poly(n)
    }

    pub fn evaluate_q(&self, n: usize, s_cap: Cap, t_cap: Cap) -> BiTruncPoly<QPoly> {
        self.engine::<QPoly>(s_cap, t_cap).poly(n)
    }

    /// Coefficient of `s^r1 t^r2` for `n = 1..=n_max`, memo shared.
    pub fn sequence(
        &self,
        r1: usize,
        r2: usize,
        n_max: usize,
        memo_limit: Option<usize>,
    ) -> Vec<BigInt> {
        let mut engine = self.engine::<BigInt>(Cap::Finite(r1), Cap::Finite(r2));
        engine.set_memo_limit(memo_limit);
        (1..=n_max).map(|n| engine.poly(n).coeff(r1, r2)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_dispatch() {
        for kind in EngineKind::ALL {
            let (resolved, alias) = EngineKind::from_digits(kind.digits()).unwrap();
            assert_eq!(resolved, kind);
            assert!(!alias);
        }
        let (kind, alias) = EngineKind::from_digits("1432").unwrap();
        assert_eq!(kind, EngineKind::Cycle2341);
        assert!(alias);
        let err = EngineKind::from_digits("321").unwrap_err();
        assert!(err.to_string().contains("supported"));
        assert!(JointKind::from_digit_pair("123", "231").is_err());
    }

    #[test]
    fn engines_agree_on_avoider_counts() {
        // all engines, one-shot evaluation versus shared-memo sequences
        for kind in EngineKind::ALL {
            let seq = kind.sequence(0, 6, None);
            for (i, v) in seq.iter().enumerate() {
                assert_eq!(
                    *v,
                    kind.evaluate(i + 1, Cap::Finite(0)).coeff(0),
                    "{:?}, n = {}",
                    kind,
                    i + 1
                );
            }
        }
    }

    #[test]
    fn joint_sequence_matches_engine() {
        let seq = JointKind::Pair123And132.sequence(2, 2, 8, None);
        assert_eq!(seq[7], BigInt::from(306));
    }
}
