//! Exact rational arithmetic used throughout the crate.
//!
//! All weights, durations and costs are rationals so that invariants like
//! `L = W + d·Δ` or "total transmission time equals W" hold exactly, with no
//! floating-point tolerance questions. Benchmark reports convert to `f64`
//! only at the aggregation boundary.

use num::rational::Ratio;
use num::Zero;
use thiserror::Error;

/// Exact rational scalar: weights, durations, setup costs, bounds.
pub type Q = Ratio<i64>;

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Q {
    Ratio::from_integer(n)
}

pub fn q_zero() -> Q {
    Q::zero()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty number")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `p` or `p/q` (e.g. `5`, `-3`, `7/2`).
pub fn parse_q(s: &str) -> Result<Q, RationalParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    match s.split_once('/') {
        None => {
            let n: i64 = s
                .parse()
                .map_err(|_| RationalParseError::BadInteger(s.to_string()))?;
            Ok(q(n))
        }
        Some((num, den)) => {
            let n: i64 = num
                .trim()
                .parse()
                .map_err(|_| RationalParseError::BadInteger(num.to_string()))?;
            let d: i64 = den
                .trim()
                .parse()
                .map_err(|_| RationalParseError::BadInteger(den.to_string()))?;
            if d == 0 {
                return Err(RationalParseError::ZeroDenominator(s.to_string()));
            }
            Ok(Ratio::new(n, d))
        }
    }
}

/// Lossy conversion for report aggregation. Exact for the magnitudes the
/// benchmarks produce (numerators and denominators well below 2^53).
pub fn q_to_f64(x: Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}
