//! Exact frame bounds.
//!
//! Frame bounds are rationals `M/N`. They travel through JSON and the command
//! line as `"p/q"` strings (an integer `"p"` is accepted too).

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: i64 = num
        .parse()
        .map_err(|_| Error::InvalidAlpha(format!("cannot parse {text:?} as p/q")))?;
    let den: i64 = den
        .parse()
        .map_err(|_| Error::InvalidAlpha(format!("cannot parse {text:?} as p/q")))?;
    if den == 0 {
        return Err(Error::InvalidAlpha(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

/// `M/N` as a rational.
pub fn ratio(m: usize, n: usize) -> Rational {
    Rational::new(m as i64, n as i64)
}

/// Returns `value` as an integer when it is one.
pub fn as_integer(value: Rational) -> Option<i64> {
    value.is_integer().then(|| value.to_integer())
}

pub fn to_f64(value: Rational) -> f64 {
    *value.numer() as f64 / *value.denom() as f64
}

pub(crate) mod serde_str {
    use super::*;

    pub fn serialize<S: Serializer>(
        value: &Rational,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}
