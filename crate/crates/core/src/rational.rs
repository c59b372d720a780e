//! Exact rational numbers and their `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn from_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p"` or `"p/q"` with an optional leading minus sign on `p`.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let err = || Error::Parse {
        what: "rational",
        input: input.to_string(),
    };
    let s = input.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (s, None),
    };
    let num = parse_int(num).ok_or_else(err)?;
    let den = match den {
        Some(q) => {
            let q = parse_int(q).ok_or_else(err)?;
            if !q.is_positive() {
                return Err(err());
            }
            q
        }
        None => BigInt::one(),
    };
    Ok(Rational::new(num, den))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Renders `p/q`, or just `p` when the value is an integer.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Returns the value as a `u64` if it is a non-negative integer that fits.
pub fn to_u64(r: &Rational) -> Option<u64> {
    if !r.is_integer() || r.is_negative() {
        return None;
    }
    u64::try_from(r.to_integer()).ok()
}

/// Serde adapter: writes a rational as a `"p/q"` string and reads either a
/// JSON integer or such a string.
pub mod text {
    use serde::de::{self, Deserializer};
    use serde::Deserialize;
    use serde::Serializer;

    use super::Rational;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Entry {
        Int(i64),
        Text(String),
    }

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        match Entry::deserialize(d)? {
            Entry::Int(v) => Ok(super::from_int(v)),
            Entry::Text(t) => super::parse_rational(&t).map_err(de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), from_int(3));
        assert_eq!(
            parse_rational("2/4").unwrap(),
            Rational::new(BigInt::from(1), BigInt::from(2))
        );
        assert_eq!(parse_rational("-1/3").unwrap().to_string(), "-1/3");
        assert_eq!(parse_rational("0/7").unwrap(), zero());
    }

    #[test]
    fn rejects_garbage() {
        for bad in [
            "", "/", "1/", "/2", "1/0", "1/-2", "+1", "1.5", "a/b", "1/2/3", "--1",
        ] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "1", "7/3", "-5/12"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
    }
}
