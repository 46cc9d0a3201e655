//! Exact rational values: the substrate for the deformed operations,
//! witnesses, and interval endpoints.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms
//! with a positive denominator; `num_rational::BigRational` already
//! guarantees both invariants on construction.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision exact fraction in lowest terms.
pub type Rational = num_rational::BigRational;

/// Build a rational from small integers. Panics on a zero denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Build an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Convert to binary64. Values beyond the f64 range saturate to
/// signed infinity.
pub fn to_f64(r: &Rational) -> f64 {
    match r.to_f64() {
        Some(v) => v,
        None => {
            if r.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        }
    }
}

/// Parse an exact rational literal.
///
/// Accepted forms: an integer (`"42"`, `"-3"`), a fraction with a
/// positive integer denominator (`"11/12"`, `"-1/2"`), or a finite
/// decimal (`"0.25"`, `"-3.5"`) converted exactly — never through a
/// binary float.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let s = input.trim();
    let err = |message: &str| Error::Parse {
        column: 1,
        message: format!("{message} in rational literal {input:?}"),
    };
    if s.is_empty() {
        return Err(err("empty input"));
    }
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    if digits.is_empty() {
        return Err(err("missing digits"));
    }

    let magnitude = if let Some((numer, denom)) = digits.split_once('/') {
        let n = parse_digits(numer).ok_or_else(|| err("invalid numerator"))?;
        let d = parse_digits(denom).ok_or_else(|| err("invalid denominator"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        Rational::new(n, d)
    } else if let Some((whole, frac)) = digits.split_once('.') {
        let w = parse_digits(whole).ok_or_else(|| err("invalid integer part"))?;
        let f = parse_digits(frac).ok_or_else(|| err("invalid fractional part"))?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        Rational::from_integer(w) + Rational::new(f, scale)
    } else {
        let n = parse_digits(digits).ok_or_else(|| err("invalid digits"))?;
        Rational::from_integer(n)
    };

    Ok(if sign < 0 { -magnitude } else { magnitude })
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// True when the value is exactly one.
pub fn is_one(r: &Rational) -> bool {
    r.numer().is_one() && r.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse_rational("11/12").unwrap(), ratio(11, 12));
        assert_eq!(parse_rational("-1/2").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("42").unwrap(), int(42));
        assert_eq!(parse_rational("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational("-3.5").unwrap(), ratio(-7, 2));
        assert_eq!(parse_rational(" 2/4 ").unwrap(), ratio(1, 2));
    }

    #[test]
    fn decimal_conversion_is_exact() {
        // 0.1 has no finite binary expansion; the exact value must be 1/10.
        assert_eq!(parse_rational("0.1").unwrap(), ratio(1, 10));
        assert_eq!(parse_rational("0.110").unwrap(), ratio(11, 100));
    }

    #[test]
    fn rejects_malformed_literals() {
        for bad in ["", "-", "1/0", "1.2.3", "1e5", "/3", "3.", ".5", "1/-2", "a"] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn conversion_handles_large_components() {
        // Ratio of two ~300-digit integers close to 3/7.
        let big = BigInt::from(10u32).pow(300u32);
        let r = Rational::new(big.clone() * 3, big * 7);
        assert!((to_f64(&r) - 3.0 / 7.0).abs() < 1e-15);

        let huge = Rational::from_integer(BigInt::from(10u32).pow(400u32));
        assert_eq!(to_f64(&huge), f64::INFINITY);
        assert_eq!(to_f64(&-huge), f64::NEG_INFINITY);
    }

    #[test]
    fn display_roundtrips() {
        for s in ["11/12", "-2/3", "7", "0"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(r.to_string(), *s);
            assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
        }
    }
}
