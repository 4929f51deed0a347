//! Sequence post-processing: exact polynomial fitting and emission formats.
//!
//! The fitter probes whether a counting sequence `a(n)` has the shape
//! `p(n) * 2^n` with `p` a polynomial of prescribed degree, entirely in
//! exact rational arithmetic: divide out `2^n`, difference `degree + 1`
//! times, and check that everything vanishes. On success the polynomial is
//! reconstructed from the forward differences and re-validated at every
//! supplied point.
//!
//! Emission covers b-file ("n a(n)" lines), JSON (all numbers as decimal
//! strings, so values beyond 64 bits round-trip exactly), CSV, and a plain
//! comma-separated list.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fe_joint::JointEngine;
use crate::poly::Cap;

/// First differences `seq[i+1] - seq[i]`.
pub fn finite_difference(seq: &[BigRational]) -> Vec<BigRational> {
    seq.windows(2).map(|w| &w[1] - &w[0]).collect()
}

/// Outcome of a `p(n) * 2^n` probe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FitVerdict {
    Fits,
    /// `n` of the first supplied point that breaks the polynomial shape
    /// (the last point entering the first nonzero high-order difference).
    FailsAt(usize),
    InsufficientData { required: usize, given: usize },
}

/// Result of [`check_poly_times_2n`] / [`fit_poly_times_2n`].
#[derive(Clone, Debug, PartialEq)]
pub struct FitResult {
    pub verdict: FitVerdict,
    /// Monomial coefficients of `p(n)`, ascending; empty unless `Fits`.
    pub poly_coeffs: Vec<BigRational>,
    /// First `n` from which `a(n) = p(n) * 2^n` was verified.
    pub valid_from: usize,
    /// Last `n` the fit was checked against.
    pub checked_to: usize,
}

impl FitResult {
    /// Evaluate the recovered `p` at `n`.
    pub fn poly_at(&self, n: usize) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(n));
        let mut acc = BigRational::zero();
        for c in self.poly_coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }
}

/// The number of permutations with exactly `r` occurrences of 123 and `s`
/// occurrences of 132, for `n` from `r + s + 1` to `n_max`, probed for the
/// shape `p(n) * 2^n` with `deg p = r + s`.
pub fn check_poly_times_2n(r: usize, s: usize, n_max: usize) -> FitResult {
    let offset = r + s + 1;
    let degree = r + s;
    let required = offset + degree + 2;
    if n_max < required {
        return FitResult {
            verdict: FitVerdict::InsufficientData {
                required,
                given: n_max,
            },
            poly_coeffs: Vec::new(),
            valid_from: offset,
            checked_to: n_max,
        };
    }
    let mut engine = JointEngine::<BigInt>::pair_123_132(Cap::Finite(r), Cap::Finite(s));
    let values: Vec<BigInt> = (offset..=n_max).map(|n| engine.poly(n).coeff(r, s)).collect();
    fit_poly_times_2n(&values, offset, degree)
}

/// Probe an arbitrary integer sequence (`values[i] = a(offset + i)`) for the
/// shape `a(n) = p(n) * 2^n` with `deg p = degree`.
pub fn fit_poly_times_2n(values: &[BigInt], offset: usize, degree: usize) -> FitResult {
    let n_max = offset + values.len().saturating_sub(1);
    let required = offset + degree + 2;
    if offset + values.len() <= required {
        return FitResult {
            verdict: FitVerdict::InsufficientData {
                required,
                given: n_max,
            },
            poly_coeffs: Vec::new(),
            valid_from: offset,
            checked_to: n_max,
        };
    }

    // b(n) = a(n) / 2^n, exactly
    let scaled: Vec<BigRational> = values
        .iter()
        .enumerate()
        .map(|(i, v)| BigRational::new(v.clone(), BigInt::one() << (offset + i)))
        .collect();

    // degree + 1 differences must vanish identically
    let mut diffs = scaled.clone();
    for _ in 0..=degree {
        diffs = finite_difference(&diffs);
    }
    if let Some(j) = diffs.iter().position(|d| !d.is_zero()) {
        return FitResult {
            verdict: FitVerdict::FailsAt(offset + j + degree + 1),
            poly_coeffs: Vec::new(),
            valid_from: offset,
            checked_to: n_max,
        };
    }

    // Newton forward form from the base point: p(n) = sum over j of
    // (j-th difference at offset) * C(n - offset, j), expanded to monomials
    let mut table = scaled.clone();
    let mut poly = vec![BigRational::zero(); degree + 1];
    let mut basis = vec![BigRational::one()]; // C(n - offset, 0)
    for j in 0..=degree {
        for (k, b) in basis.iter().enumerate() {
            poly[k] += &table[0] * b;
        }
        table = finite_difference(&table);
        // basis *= (n - offset - j) / (j + 1)
        basis = mul_linear(&basis, -BigRational::from_integer(BigInt::from(offset + j)));
        let div = BigRational::from_integer(BigInt::from(j + 1));
        for b in &mut basis {
            *b /= &div;
        }
    }
    while poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }

    let result = FitResult {
        verdict: FitVerdict::Fits,
        poly_coeffs: poly,
        valid_from: offset,
        checked_to: n_max,
    };
    // the reconstruction must reproduce every supplied point
    debug_assert!(scaled
        .iter()
        .enumerate()
        .all(|(i, b)| result.poly_at(offset + i) == *b));
    result
}

/// Multiply an ascending-coefficient polynomial by `(x + c)`.
fn mul_linear(poly: &[BigRational], c: BigRational) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); poly.len() + 1];
    for (k, a) in poly.iter().enumerate() {
        out[k + 1] += a;
        out[k] += a * &c;
    }
    out
}

/// One computed sequence plus everything needed to reproduce it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SequenceRecord {
    /// Engine identifier ("tailswap", "cycle", "increasing", "joint", "oracle").
    pub engine: String,
    /// Pattern digit strings, e.g. `["132"]` or `["123", "132"]`.
    pub patterns: Vec<String>,
    /// Truncation caps, one per tracked pattern.
    pub caps: Vec<u64>,
    /// Whether terms were refined by the inversion statistic.
    pub q: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    /// `values[i]` is the term for `n = offset + i`.
    pub offset: u64,
    #[serde(with = "bigint_strings")]
    pub values: Vec<BigInt>,
}

mod bigint_strings {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(values: &[BigInt], ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(values.iter().map(BigInt::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> std::result::Result<Vec<BigInt>, D::Error> {
        let strings = Vec::<String>::deserialize(de)?;
        strings
            .iter()
            .map(|s| BigInt::from_str(s).map_err(|e| D::Error::custom(format!("{s:?}: {e}"))))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmitFormat {
    BFile,
    Json,
    Csv,
    Plain,
}

impl FromStr for EmitFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bfile" => Ok(EmitFormat::BFile),
            "json" => Ok(EmitFormat::Json),
            "csv" => Ok(EmitFormat::Csv),
            "plain" => Ok(EmitFormat::Plain),
            other => Err(Error::Parse(format!(
                "unknown format {other:?} (expected bfile, json, csv, or plain)"
            ))),
        }
    }
}

impl fmt::Display for EmitFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EmitFormat::BFile => "bfile",
            EmitFormat::Json => "json",
            EmitFormat::Csv => "csv",
            EmitFormat::Plain => "plain",
        })
    }
}

/// Render a sequence record; byte output is deterministic per format.
pub fn emit(rec: &SequenceRecord, format: EmitFormat) -> String {
    match format {
        EmitFormat::BFile => {
            let mut out = String::new();
            for (i, v) in rec.values.iter().enumerate() {
                out.push_str(&format!("{} {}\n", rec.offset + i as u64, v));
            }
            out
        }
        EmitFormat::Plain => rec
            .values
            .iter()
            .map(BigInt::to_string)
            .collect::<Vec<_>>()
            .join(", "),
        EmitFormat::Csv => {
            let mut out = String::from("n,value\n");
            for (i, v) in rec.values.iter().enumerate() {
                out.push_str(&format!("{},{}\n", rec.offset + i as u64, v));
            }
            out
        }
        EmitFormat::Json => {
            serde_json::to_string_pretty(rec).expect("record serialization cannot fail")
        }
    }
}

/// Parse b-file text back into `(offset, values)`. Lines starting with `#`
/// and blank lines are skipped; indices must ascend by one.
pub fn parse_bfile(text: &str) -> Result<(u64, Vec<BigInt>)> {
    let mut offset = None;
    let mut next = 0u64;
    let mut values = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(n), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Parse(format!(
                "line {}: expected \"n value\", got {line:?}",
                lineno + 1
            )));
        };
        let n: u64 = n
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad index {n:?}", lineno + 1)))?;
        let v = BigInt::from_str(v)
            .map_err(|_| Error::Parse(format!("line {}: bad value {v:?}", lineno + 1)))?;
        match offset {
            None => {
                offset = Some(n);
                next = n + 1;
            }
            Some(_) => {
                if n != next {
                    return Err(Error::Parse(format!(
                        "line {}: index {n} out of order (expected {next})",
                        lineno + 1
                    )));
                }
                next += 1;
            }
        }
        values.push(v);
    }
    Ok((offset.unwrap_or(0), values))
}

/// Parse the JSON emission back into a record.
pub fn parse_json(text: &str) -> Result<SequenceRecord> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}
