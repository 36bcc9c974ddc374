//! Exact rational scalars and their `"p/q"` wire format.
//!
//! Every exact quantity in the crate is a [`Ratio`] (arbitrary-precision
//! `num_rational::BigRational`). The textual form is always `p/q` with the
//! fraction reduced and the denominator positive, even for integers
//! (`"5/1"`, `"0/1"`), so that files round-trip byte for byte.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Ratio = BigRational;

/// Shorthand for an integer rational.
pub fn ratio_int(n: i64) -> Ratio {
    Ratio::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics on `d == 0`; intended for literals in code
/// and tests.
pub fn ratio(n: i64, d: i64) -> Ratio {
    assert!(d != 0, "zero denominator");
    Ratio::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text form `p/q` (reduced, positive denominator).
pub fn ratio_to_string(r: &Ratio) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `"p/q"` or a bare integer `"p"`.
pub fn parse_ratio(s: &str) -> Result<Ratio> {
    let bad = || Error::ParseRational(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.trim().parse().map_err(|_| bad())?;
    let d: BigInt = den.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Ratio::new(n, d))
}

/// Lossy conversion for Monte Carlo comparisons and gap columns.
pub fn ratio_to_f64(r: &Ratio) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of lossy parts for out-of-range operands.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Exact factorial as a rational.
pub fn factorial(n: usize) -> Ratio {
    let mut acc = BigInt::from(1);
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Ratio::from_integer(acc)
}

/// Exact binomial coefficient as a rational; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Ratio {
    if k > n {
        return Ratio::zero();
    }
    Ratio::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

/// Exact integer power with a signed exponent base restriction: `r^k`, k >= 0.
pub fn ratio_pow(r: &Ratio, k: usize) -> Ratio {
    let mut acc = ratio_int(1);
    for _ in 0..k {
        acc *= r;
    }
    acc
}

/// Absolute value.
pub fn ratio_abs(r: &Ratio) -> Ratio {
    r.abs()
}
