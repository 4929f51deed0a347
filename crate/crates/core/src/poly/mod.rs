//! Exact truncated polynomial arithmetic.
//!
//! All engine computations happen in the ring of polynomials in a main
//! variable `t`, truncated at a degree cap: powers of `t` above the cap are
//! discarded on every operation. Coefficients are exact — either plain
//! [`num_bigint::BigInt`]s or, when the inversion statistic is tracked,
//! polynomials in an auxiliary variable `q` with `BigInt` coefficients
//! (`q` is never truncated). Joint two-pattern engines use [`BiTruncPoly`],
//! a grid truncated independently in `s` and `t`.
//!
//! Floating point appears nowhere; coefficient sums routinely exceed 2^64.

mod bi;
mod coeff;
mod trunc;

pub use bi::BiTruncPoly;
pub use coeff::{Coeff, QPoly};
pub use trunc::TruncPoly;

use std::fmt;

/// Degree bound for the main truncation variable.
///
/// `Finite(r)` keeps the coefficients of `t^0..t^r`; `Unbounded` is full
/// mode, used for small-`n` whole-polynomial computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cap {
    Finite(usize),
    Unbounded,
}

impl Cap {
    /// True if `deg` survives this cap.
    pub fn admits(self, deg: usize) -> bool {
        match self {
            Cap::Finite(r) => deg <= r,
            Cap::Unbounded => true,
        }
    }

    pub fn min(self, other: Cap) -> Cap {
        match (self, other) {
            (Cap::Finite(a), Cap::Finite(b)) => Cap::Finite(a.min(b)),
            (Cap::Finite(a), Cap::Unbounded) | (Cap::Unbounded, Cap::Finite(a)) => Cap::Finite(a),
            (Cap::Unbounded, Cap::Unbounded) => Cap::Unbounded,
        }
    }

    /// First exponent value that is dead under this cap (`r + 1`), i.e. the
    /// level at which state exponents may be collapsed. `None` in full mode.
    pub fn saturation_level(self) -> Option<u32> {
        match self {
            Cap::Finite(r) => Some(r as u32 + 1),
            Cap::Unbounded => None,
        }
    }
}

impl From<usize> for Cap {
    fn from(r: usize) -> Self {
        Cap::Finite(r)
    }
}

impl fmt::Display for Cap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cap::Finite(r) => write!(f, "{r}"),
            Cap::Unbounded => write!(f, "inf"),
        }
    }
}
