//! Coefficient kinds for truncated polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A coefficient ring for [`super::TruncPoly`] / [`super::BiTruncPoly`].
///
/// Two kinds exist: plain exact integers, and exact polynomials in the
/// inversion variable `q` (for refined counting). Mixing kinds is a compile
/// error; `q` handling is the only behavioral difference, so it is the only
/// extra method.
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug + Send + Sync {
    /// Whether this kind carries the inversion variable `q`.
    const TRACKS_Q: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;

    /// Multiply by `q^e`. Integer coefficients accept only `e = 0`.
    fn q_shift(&self, e: u64) -> Self;

    /// Render as a multiplicand in front of a power of the main variable.
    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl Coeff for BigInt {
    const TRACKS_Q: bool = false;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn q_shift(&self, e: u64) -> Self {
        assert_eq!(e, 0, "integer coefficients cannot absorb a power of q");
        self.clone()
    }

    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Exact polynomial in the inversion variable `q`.
///
/// Dense storage indexed by `q`-degree, trailing zeros trimmed so that
/// structural equality is semantic equality. `q` is never truncated: its
/// degree is bounded by `n(n-1)/2` for length-`n` permutations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// The monomial `c * q^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        if Zero::is_zero(&c) {
            return QPoly::default();
        }
        let mut coeffs = vec![BigInt::from(0); e + 1];
        coeffs[e] = c;
        QPoly { coeffs }
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    /// Coefficients by ascending `q`-degree (trailing zeros trimmed).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Evaluate at `q = 1` (collapses the refinement).
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl From<BigInt> for QPoly {
    fn from(c: BigInt) -> Self {
        QPoly::from_coeffs(vec![c])
    }
}

impl Coeff for QPoly {
    const TRACKS_Q: bool = true;

    fn zero() -> Self {
        QPoly::default()
    }

    fn one() -> Self {
        QPoly::from(BigInt::from(1))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && One::is_one(&self.coeffs[0])
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::from(0));
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::default();
        }
        let mut out = vec![BigInt::from(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }

    fn q_shift(&self, e: u64) -> Self {
        if e == 0 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::from(0); e as usize + self.coeffs.len()];
        coeffs[e as usize..].clone_from_slice(&self.coeffs);
        QPoly { coeffs }
    }

    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .map(|(e, c)| match (e, One::is_one(c)) {
                (0, _) => format!("{c}"),
                (1, true) => "q".to_string(),
                (1, false) => format!("{c}*q"),
                (_, true) => format!("q^{e}"),
                (_, false) => format!("{c}*q^{e}"),
            })
            .collect();
        match terms.len() {
            0 => write!(f, "0"),
            1 => write!(f, "{}", terms[0]),
            _ => write!(f, "({})", terms.join(" + ")),
        }
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_factor(f)
    }
}
