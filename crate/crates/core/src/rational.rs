//! Exact rationals and their `"p/q"` string form.

use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number used throughout the crate.
pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Parses `"p"`, `"p/q"` or a decimal such as `"-0.5"`.
pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n = i64::from_str(n.trim()).map_err(|_| Error::BadRational(s.into()))?;
        let d = i64::from_str(d.trim()).map_err(|_| Error::BadRational(s.into()))?;
        if d == 0 {
            return Err(Error::BadRational(s.into()));
        }
        return Ok(Q::new(n, d));
    }
    if let Some((int, dec)) = t.split_once('.') {
        if dec.is_empty() || !dec.bytes().all(|b| b.is_ascii_digit()) || dec.len() > 15 {
            return Err(Error::BadRational(s.into()));
        }
        let neg = int.starts_with('-');
        let int_part = i64::from_str(int.trim_start_matches(['-', '+']).trim())
            .or_else(|_| if int.trim_start_matches(['-', '+']).is_empty() { Ok(0) } else { Err(()) })
            .map_err(|_| Error::BadRational(s.into()))?;
        let den = 10i64.pow(dec.len() as u32);
        let num = int_part * den + i64::from_str(dec).map_err(|_| Error::BadRational(s.into()))?;
        return Ok(Q::new(if neg { -num } else { num }, den));
    }
    i64::from_str(t).map(Q::from_integer).map_err(|_| Error::BadRational(s.into()))
}

/// Canonical text form: `"p/q"` in lowest terms, `"p"` for integers.
pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}

/// Exact square root when `x` is the square of a rational.
pub fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Q::zero());
    }
    let n = int_sqrt(*x.numer())?;
    let d = int_sqrt(*x.denom())?;
    Some(Q::new(n, d))
}

fn int_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = num_integer::Roots::sqrt(&n);
    (r * r == n).then_some(r)
}

/// Serde adapter for a single rational as a string.
pub mod as_str {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let v = RationalInput::deserialize(d)?;
        v.to_q().map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for a vector of rationals as strings.
pub mod vec_as_str {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = xs.iter().map(fmt_q).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        let v = Vec::<RationalInput>::deserialize(d)?;
        v.iter()
            .map(|r| r.to_q().map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Accepts either an integer literal or a rational string on input.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum RationalInput {
    Int(i64),
    Text(String),
}

impl RationalInput {
    fn to_q(&self) -> Result<Q> {
        match self {
            RationalInput::Int(n) => Ok(q(*n)),
            RationalInput::Text(s) => parse_q(s),
        }
    }
}

/// Newtype so rationals can sit in serialized maps and lists directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(pub Q);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        as_str::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        as_str::deserialize(d).map(Rat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse_q("3").unwrap(), q(3));
        assert_eq!(parse_q("-2/4").unwrap(), frac(-1, 2));
        assert_eq!(parse_q("-0.25").unwrap(), frac(-1, 4));
        assert_eq!(parse_q(" 7 / 3 ").unwrap(), frac(7, 3));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("abc").is_err());
    }

    #[test]
    fn formats_lowest_terms() {
        assert_eq!(fmt_q(&frac(6, -4)), "-3/2");
        assert_eq!(fmt_q(&q(5)), "5");
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(rational_sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(rational_sqrt(&q(2)), None);
        assert_eq!(rational_sqrt(&q(-1)), None);
    }
}
