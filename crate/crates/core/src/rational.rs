//! Exact rational parameters. Values arrive as `p/q` or plain integers;
//! decimal notation is refused so nothing is silently rounded.

use crate::error::{Error, Result};
use num_integer::Integer;

pub type Rational = num_rational::Ratio<i64>;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    let bad = || Error::MalformedToken(s.to_string());
    if s.contains(['.', 'e', 'E']) {
        return Err(bad());
    }
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => s.parse::<i64>().map(int).map_err(|_| bad()),
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn floor(r: Rational) -> i64 {
    r.numer().div_floor(r.denom())
}

pub fn ceil(r: Rational) -> i64 {
    r.numer().div_ceil(r.denom())
}

/// Largest integer strictly below `r`.
pub fn below(r: Rational) -> i64 {
    ceil(r) - 1
}

pub fn half(v: i64) -> Rational {
    Rational::new(v, 2)
}

pub(crate) mod serde_opt {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(r) => s.serialize_str(&format_rational(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let raw: Option<String> = Option::deserialize(d)?;
        raw.map(|t| parse_rational(&t).map_err(serde::de::Error::custom)).transpose()
    }
}

pub(crate) mod serde_one {
    use super::{format_rational, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(v))
    }
}
