//! Polynomials truncated independently in two variables `s` and `t`.

use num_bigint::BigInt;

use super::{Cap, Coeff, TruncPoly};

/// Bidegree-truncated polynomial: a grid of coefficients for `s^a t^b`
/// with `a` capped at `s_cap` and `b` at `t_cap`.
///
/// Row `a` holds the `t`-polynomial multiplying `s^a`. With a finite `s_cap`
/// all rows stay materialized; in full mode trailing zero rows are trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiTruncPoly<C: Coeff = BigInt> {
    s_cap: Cap,
    t_cap: Cap,
    rows: Vec<TruncPoly<C>>,
}

impl<C: Coeff> BiTruncPoly<C> {
    pub fn zero(s_cap: Cap, t_cap: Cap) -> Self {
        let rows = match s_cap {
            Cap::Finite(r) => vec![TruncPoly::zero(t_cap); r + 1],
            Cap::Unbounded => Vec::new(),
        };
        BiTruncPoly { s_cap, t_cap, rows }
    }

    pub fn one(s_cap: Cap, t_cap: Cap) -> Self {
        let mut p = Self::zero(s_cap, t_cap);
        p.ensure_row(0);
        p.rows[0] = TruncPoly::one(t_cap);
        p
    }

    pub fn s_cap(&self) -> Cap {
        self.s_cap
    }

    pub fn t_cap(&self) -> Cap {
        self.t_cap
    }

    /// Rows by ascending `s`-degree; row `a` multiplies `s^a`.
    pub fn rows(&self) -> &[TruncPoly<C>] {
        &self.rows
    }

    /// Coefficient of `s^a t^b`.
    pub fn coeff(&self, a: usize, b: usize) -> C {
        self.rows
            .get(a)
            .map(|row| row.coeff(b))
            .unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(TruncPoly::is_zero)
    }

    /// Add `c * s^a t^b`, dropping it silently if either cap is exceeded.
    pub fn add_term(&mut self, a: usize, b: usize, c: &C) {
        if !self.s_cap.admits(a) || c.is_zero() {
            return;
        }
        self.ensure_row(a);
        self.rows[a].add_term(b, c);
        self.trim();
    }

    /// `self += other * s^s_exp * t^t_exp * q^q_exp`, honoring both caps.
    pub fn add_shifted(&mut self, other: &Self, s_exp: usize, t_exp: usize, q_exp: u64) {
        for (a, row) in other.rows.iter().enumerate() {
            if row.is_zero() {
                continue;
            }
            let target = a + s_exp;
            if !self.s_cap.admits(target) {
                if matches!(self.s_cap, Cap::Finite(_)) {
                    break;
                }
                continue;
            }
            self.ensure_row(target);
            self.rows[target].add_shifted(row, t_exp, q_exp);
        }
        self.trim();
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.s_cap.min(other.s_cap), self.t_cap.min(other.t_cap));
        out.add_shifted(self, 0, 0, 0);
        out.add_shifted(other, 0, 0, 0);
        out
    }

    /// Discard powers of `s` above `r1` and powers of `t` above `r2`.
    pub fn chop(&self, r1: usize, r2: usize) -> Self {
        let mut out = Self::zero(self.s_cap.min(Cap::Finite(r1)), self.t_cap.min(Cap::Finite(r2)));
        for (a, row) in self.rows.iter().take(r1 + 1).enumerate() {
            out.rows[a] = row.chop(r2);
        }
        out
    }

    /// Sum out `s`: the marginal distribution of the `t`-tracked statistic.
    pub fn sum_over_s(&self) -> TruncPoly<C> {
        let mut acc = TruncPoly::zero(self.t_cap);
        for row in &self.rows {
            acc.add_shifted(row, 0, 0);
        }
        acc
    }

    /// Sum out `t`: the marginal of the `s`-tracked statistic, as a
    /// polynomial whose main variable is `s`.
    pub fn sum_over_t(&self) -> TruncPoly<C> {
        let mut acc = TruncPoly::zero(self.s_cap);
        for (a, row) in self.rows.iter().enumerate() {
            acc.add_term(a, &row.sum_coeffs());
        }
        acc
    }

    fn ensure_row(&mut self, a: usize) {
        if self.rows.len() <= a {
            self.rows.resize(a + 1, TruncPoly::zero(self.t_cap));
        }
    }

    fn trim(&mut self) {
        if matches!(self.s_cap, Cap::Unbounded) {
            while self.rows.last().is_some_and(TruncPoly::is_zero) {
                self.rows.pop();
            }
        }
    }
}

impl BiTruncPoly<super::QPoly> {
    /// Evaluate every coefficient at `q = 1`, dropping the refinement.
    pub fn at_q_one(&self) -> BiTruncPoly<BigInt> {
        let mut out = BiTruncPoly::zero(self.s_cap, self.t_cap);
        for (a, row) in self.rows.iter().enumerate() {
            out.ensure_row(a);
            out.rows[a] = row.at_q_one();
        }
        out.trim();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_respects_both_caps() {
        let one = BiTruncPoly::<BigInt>::one(Cap::Finite(1), Cap::Finite(1));
        let mut acc = BiTruncPoly::zero(Cap::Finite(1), Cap::Finite(1));
        acc.add_shifted(&one, 1, 1, 0);
        assert_eq!(acc.coeff(1, 1), BigInt::from(1));
        let mut gone = BiTruncPoly::zero(Cap::Finite(1), Cap::Finite(1));
        gone.add_shifted(&one, 2, 0, 0);
        assert!(gone.is_zero());
    }

    #[test]
    fn marginals() {
        // 1 + s*t^2 + 3*s
        let mut p = BiTruncPoly::<BigInt>::zero(Cap::Unbounded, Cap::Unbounded);
        let one = BiTruncPoly::one(Cap::Unbounded, Cap::Unbounded);
        p.add_shifted(&one, 0, 0, 0);
        p.add_shifted(&one, 1, 2, 0);
        p.add_shifted(&one, 1, 0, 0);
        p.add_shifted(&one, 1, 0, 0);
        p.add_shifted(&one, 1, 0, 0);
        let over_s = p.sum_over_s();
        assert_eq!(over_s.coeff(0), BigInt::from(4));
        assert_eq!(over_s.coeff(2), BigInt::from(1));
        let over_t = p.sum_over_t();
        assert_eq!(over_t.coeff(0), BigInt::from(1));
        assert_eq!(over_t.coeff(1), BigInt::from(4));
    }
}
