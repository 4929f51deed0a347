//! Dense polynomials in the main variable `t`, truncated at a degree cap.

use std::fmt;

use num_bigint::BigInt;

use super::{Cap, Coeff, QPoly};

/// Polynomial in `t` with exact coefficients, truncated at [`Cap`].
///
/// With a finite cap `r` the coefficient vector always has length `r + 1`
/// (trailing zeros stay materialized); in full mode trailing zeros are
/// trimmed so equality is semantic. Values are immutable in spirit: every
/// operation returns a fresh polynomial or accumulates into `self` without
/// observable sharing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncPoly<C: Coeff = BigInt> {
    cap: Cap,
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncPoly<C> {
    pub fn zero(cap: Cap) -> Self {
        let coeffs = match cap {
            Cap::Finite(r) => vec![C::zero(); r + 1],
            Cap::Unbounded => Vec::new(),
        };
        TruncPoly { cap, coeffs }
    }

    pub fn one(cap: Cap) -> Self {
        let mut p = Self::zero(cap);
        p.add_term(0, &C::one());
        p
    }

    /// Build from coefficients by ascending `t`-degree, normalizing length.
    pub fn from_coeffs(cap: Cap, coeffs: Vec<C>) -> Self {
        let mut p = Self::zero(cap);
        for (deg, c) in coeffs.into_iter().enumerate() {
            p.add_term(deg, &c);
        }
        p
    }

    pub fn cap(&self) -> Cap {
        self.cap
    }

    /// Coefficient of `t^deg` (zero above the stored range).
    pub fn coeff(&self, deg: usize) -> C {
        self.coeffs.get(deg).cloned().unwrap_or_else(C::zero)
    }

    /// Stored coefficients by ascending degree.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coeff::is_zero)
    }

    /// Add `c * t^deg`, dropping it silently if `deg` exceeds the cap.
    pub fn add_term(&mut self, deg: usize, c: &C) {
        if !self.cap.admits(deg) || c.is_zero() {
            return;
        }
        if self.coeffs.len() <= deg {
            self.coeffs.resize(deg + 1, C::zero());
        }
        self.coeffs[deg].add_assign_ref(c);
        self.trim();
    }

    /// Discard all powers of `t` above `r`; the cap becomes `min(cap, r)`.
    pub fn chop(&self, r: usize) -> Self {
        let cap = self.cap.min(Cap::Finite(r));
        let Cap::Finite(bound) = cap else { unreachable!() };
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(bound + 1);
        coeffs.resize(bound + 1, C::zero());
        TruncPoly { cap, coeffs }
    }

    /// Coefficient-wise sum; the result lives at the smaller cap.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.cap.min(other.cap));
        out.add_shifted(self, 0, 0);
        out.add_shifted(other, 0, 0);
        out
    }

    /// Multiply by `t^t_exp * q^aux_exp`, then chop at the cap. Returns
    /// exact zero whenever `t_exp` alone exceeds the cap.
    pub fn shift_mul(&self, t_exp: usize, aux_exp: u64) -> Self {
        let mut out = Self::zero(self.cap);
        out.add_shifted(self, t_exp, aux_exp);
        out
    }

    /// Fused accumulate: `self += other * t^t_exp * q^q_exp`, honoring
    /// `self`'s cap. This is the engines' inner-loop operation.
    pub fn add_shifted(&mut self, other: &Self, t_exp: usize, q_exp: u64) {
        for (deg, c) in other.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let target = deg + t_exp;
            if !self.cap.admits(target) {
                if matches!(self.cap, Cap::Finite(_)) {
                    break;
                }
                continue;
            }
            if self.coeffs.len() <= target {
                self.coeffs.resize(target + 1, C::zero());
            }
            if q_exp == 0 {
                self.coeffs[target].add_assign_ref(c);
            } else {
                self.coeffs[target].add_assign_ref(&c.q_shift(q_exp));
            }
        }
        self.trim();
    }

    /// Exact convolution, chopped at the smaller cap.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.cap.min(other.cap));
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || !out.cap.admits(i) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() || !out.cap.admits(i + j) {
                    continue;
                }
                let prod = a.mul_ref(b);
                if out.coeffs.len() <= i + j {
                    out.coeffs.resize(i + j + 1, C::zero());
                }
                out.coeffs[i + j].add_assign_ref(&prod);
            }
        }
        out.trim();
        out
    }

    /// Sum of all stored coefficients, i.e. the evaluation at `t = 1`.
    pub fn sum_coeffs(&self) -> C {
        let mut acc = C::zero();
        for c in &self.coeffs {
            acc.add_assign_ref(c);
        }
        acc
    }

    fn trim(&mut self) {
        if matches!(self.cap, Cap::Unbounded) {
            while self.coeffs.last().is_some_and(Coeff::is_zero) {
                self.coeffs.pop();
            }
        }
    }
}

impl TruncPoly<BigInt> {
    /// Coefficients as decimal strings (dense, ascending), the JSON form.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl TruncPoly<QPoly> {
    /// Evaluate every coefficient at `q = 1`, dropping the refinement.
    pub fn at_q_one(&self) -> TruncPoly<BigInt> {
        TruncPoly {
            cap: self.cap,
            coeffs: self.coeffs.iter().map(QPoly::at_one).collect(),
        }
    }

    /// Evaluate at `t = 1`, leaving a polynomial in `q` alone.
    pub fn at_t_one(&self) -> QPoly {
        self.sum_coeffs()
    }

    /// Per-`t`-degree lists of `q`-coefficients as decimal strings.
    pub fn coeff_strings(&self) -> Vec<Vec<String>> {
        self.coeffs
            .iter()
            .map(|c| c.coeffs().iter().map(|b| b.to_string()).collect())
            .collect()
    }
}

/// Canonical text form: ascending powers, zero terms skipped.
impl<C: Coeff> fmt::Display for TruncPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match deg {
                0 => c.fmt_factor(f)?,
                _ => {
                    if !c.is_one() {
                        c.fmt_factor(f)?;
                        write!(f, "*")?;
                    }
                    if deg == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{deg}")?;
                    }
                }
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

    fn poly(cap: Cap, coeffs: &[i64]) -> TruncPoly<BigInt> {
        TruncPoly::from_coeffs(cap, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn chop_binomial_cube() {
        // (1+t)^3 chopped at 2
        let p = poly(Cap::Unbounded, &[1, 3, 3, 1]);
        assert_eq!(p.chop(2), poly(Cap::Finite(2), &[1, 3, 3]));
    }

    #[test]
    fn chop_drops_everything_above_cap() {
        // t^3 * (1+t) at cap 2 is exactly zero
        let p = poly(Cap::Unbounded, &[0, 0, 0, 1, 1]);
        assert!(p.chop(2).is_zero());
    }

    #[test]
    fn chop_is_identity_below_degree() {
        let p = poly(Cap::Unbounded, &[5, 0, 2]);
        assert_eq!(p.chop(7).coeff(2), BigInt::from(2));
        assert_eq!(p.chop(7).degree(), Some(2));
    }

    #[test]
    fn add_uses_min_cap() {
        let a = poly(Cap::Finite(2), &[0, 0, 1]);
        let b = poly(Cap::Finite(3), &[0, 0, 0, 1]);
        let sum = a.add(&b);
        assert_eq!(sum.cap(), Cap::Finite(2));
        assert_eq!(sum, poly(Cap::Finite(2), &[0, 0, 1]));
    }

    #[test]
    fn add_mixed() {
        let a = poly(Cap::Unbounded, &[1, 1]);
        let b = poly(Cap::Unbounded, &[2, 0, 1]);
        assert_eq!(a.add(&b), poly(Cap::Unbounded, &[3, 1, 1]));
        assert_eq!(a.add(&TruncPoly::zero(Cap::Unbounded)), a);
    }

    #[test]
    fn shift_mul_at_cap() {
        let p = poly(Cap::Finite(2), &[1, 1]);
        assert_eq!(p.shift_mul(2, 0), poly(Cap::Finite(2), &[0, 0, 1]));
        assert!(p.shift_mul(3, 0).is_zero());
    }

    #[test]
    fn shift_mul_q_mode() {
        let one = TruncPoly::<QPoly>::one(Cap::Finite(4));
        let shifted = one.shift_mul(0, 3);
        assert_eq!(shifted.coeff(0), QPoly::monomial(BigInt::from(1), 3));
    }

    #[test]
    fn mul_full_and_truncated() {
        let p = poly(Cap::Unbounded, &[1, 1]);
        assert_eq!(p.mul(&p), poly(Cap::Unbounded, &[1, 2, 1]));
        let q = poly(Cap::Finite(1), &[1, 1]);
        assert_eq!(q.mul(&q), poly(Cap::Finite(1), &[1, 2]));
        let one = TruncPoly::one(Cap::Unbounded);
        assert_eq!(p.mul(&one), p);
    }

    #[test]
    fn display_ascending() {
        let p = poly(Cap::Unbounded, &[1430, 1287, 1950]);
        assert_eq!(p.to_string(), "1430 + 1287*t + 1950*t^2");
        let single = poly(Cap::Unbounded, &[0, 0, 1]);
        assert_eq!(single.to_string(), "t^2");
        assert_eq!(TruncPoly::<BigInt>::zero(Cap::Finite(3)).to_string(), "0");
    }
}
