//! Exact enumeration of permutations by pattern-occurrence counts.
//!
//! For a pattern `tau` and `n >= 0`, the generating polynomial
//! `f_n(t) = sum over all length-n permutations of t^(occurrences of tau)`
//! collects in its `t^r` coefficient the number of permutations with exactly
//! `r` occurrences of `tau`. Scanning all `n!` permutations computes `f_n(t)`
//! but is hopeless beyond small `n`. This crate instead evaluates recursions
//! on "remove the first element": the removed element's contribution is
//! captured by per-value counters (catalytic exponents), and for a fixed
//! coefficient cap `r` the whole computation runs over truncated polynomials
//! with a bounded state space.
//!
//! Engines are provided for three pattern families plus joint tracking:
//!
//! * [`fe_tailswap`] — patterns `1 2 .. (k-2) k (k-1)`: 132, 1243, 12354;
//! * [`fe_cycle`] — patterns `2 3 .. k 1`: 231, 2341;
//! * [`fe_increasing`] — increasing patterns: 123, 1234;
//! * [`fe_joint`] — simultaneous (123, 132) and (1234, 1243) distributions.
//!
//! Every engine can refine the count by the inversion statistic (a `q`
//! variable) and can run either truncated at a cap or in full mode. All
//! arithmetic is exact ([`num_bigint::BigInt`] coefficients); the brute-force
//! oracle in [`oracle`] cross-validates every engine at small `n`.
//!
//! [`seqtools`] post-processes the resulting integer sequences: b-file /
//! JSON / CSV emission and an exact polynomial-times-2^n fitter.

pub mod engines;
pub mod error;
pub mod fe_cycle;
pub mod fe_increasing;
pub mod fe_joint;
pub mod fe_tailswap;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod seqtools;

mod tier;

pub use error::{Error, Result};
pub use perm::{PatternSpec, Permutation, WeightMonomial, WeightVar};
pub use poly::{BiTruncPoly, Cap, Coeff, QPoly, TruncPoly};
