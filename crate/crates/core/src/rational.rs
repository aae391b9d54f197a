//! Exact rational parameters (`t`, `k`, `c`) and budget arithmetic.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::Ratio<i64>;

/// Parses `"p/q"` or an integer literal. Floats are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidParameter(format!("not a rational \"p/q\" or integer: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (
            p.trim().parse::<i64>().map_err(|_| bad())?,
            q.trim().parse::<i64>().map_err(|_| bad())?,
        ),
        None => (s.parse::<i64>().map_err(|_| bad())?, 1),
    };
    if den == 0 {
        return Err(Error::InvalidParameter(format!(
            "zero denominator in {s:?}"
        )));
    }
    Ok(Rational::new(num, den))
}

pub fn nonnegative(name: &str, r: Rational) -> Result<Rational> {
    if r.is_negative() {
        Err(Error::InvalidParameter(format!(
            "{name} must be nonnegative, got {r}"
        )))
    } else {
        Ok(r)
    }
}

pub fn positive(name: &str, r: Rational) -> Result<Rational> {
    if r.is_zero() || r.is_negative() {
        Err(Error::InvalidParameter(format!(
            "{name} must be positive, got {r}"
        )))
    } else {
        Ok(r)
    }
}

/// `floor(r)` for any sign.
pub fn floor(r: Rational) -> i64 {
    Integer::div_floor(r.numer(), r.denom())
}

/// `ceil(r)` for any sign.
pub fn ceil(r: Rational) -> i64 {
    -Integer::div_floor(&-r.numer(), r.denom())
}

/// Largest integer threshold total admitted by average `t` on `n` vertices: `floor(t * n)`.
pub fn threshold_budget(t: Rational, n: usize) -> u64 {
    floor(t * Rational::from_integer(n as i64)).max(0) as u64
}

/// Canonical text form: `p/q` in lowest terms, or `p` when integral.
pub fn format_rational(r: Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
