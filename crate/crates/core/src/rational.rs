//! Exact rational scalars.
//!
//! `Rational` is an arbitrary-precision fraction, always reduced, with a
//! positive denominator. Every geometric predicate in this crate bottoms out
//! in comparisons of these values; no rounding happens anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rational = num_rational::BigRational;

/// Shorthand constructor from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Integer-valued rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Formats as `p/q`, or just `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p/q` or `p`. The result is reduced and has a positive denominator.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let err = |m: String| Error::Parse {
        line: 0,
        column: 0,
        message: m,
    };
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(Rational::from_integer)
            .map_err(|e| err(format!("bad integer {s:?}: {e}"))),
        Some((p, q)) => {
            let p = p
                .trim()
                .parse::<BigInt>()
                .map_err(|e| err(format!("bad numerator {p:?}: {e}")))?;
            let q = q
                .trim()
                .parse::<BigInt>()
                .map_err(|e| err(format!("bad denominator {q:?}: {e}")))?;
            if q.is_zero() {
                return Err(err(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Decimal approximation for figure export only. Never used in predicates.
pub fn to_f64(q: &Rational) -> f64 {
    let digits = 17usize;
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = q.numer() * &scale / q.denom();
    let approx: f64 = scaled.to_string().parse().unwrap_or(0.0);
    approx / 1e17
}

/// Sign as -1, 0, or 1.
pub fn sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}
