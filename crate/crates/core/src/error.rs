//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input to `reduce` (or a permutation constructor) repeats a value.
    #[error("duplicate entry {0} in input")]
    DuplicateEntry(u32),

    /// Word is not a permutation of 1..=n.
    #[error("not a permutation of 1..={len}: {reason}")]
    NotAPermutation { len: usize, reason: String },

    /// `weight_monomial` was asked for a family it does not define.
    #[error("no weight definition for pattern family {0}")]
    UnsupportedFamily(String),

    /// The brute-force oracle refuses to scan n! permutations above its limit.
    #[error("oracle refuses n = {n}: limit is {limit} (override the limit to force the scan)")]
    OracleLimit { n: usize, limit: usize },

    /// Malformed textual input (permutation, b-file, JSON record).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
