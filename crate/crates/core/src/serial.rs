//! Exact decimal-string encoding of numbers for JSON and CSV.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub fn rat_to_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"123"`, `"-4"` or `"7/12"`.
pub fn parse_rat(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact number: `{s}`"));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

pub fn parse_int(s: &str) -> Result<BigInt> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("not an integer: `{s}`")))
}

/// A rational that serializes as a string and deserializes from a string or a JSON integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactRat(pub BigRational);

impl Serialize for ExactRat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rat_to_string(&self.0))
    }
}

struct RatVisitor;

impl<'de> Visitor<'de> for RatVisitor {
    type Value = ExactRat;

    fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        f.write_str("an integer or a string like \"-3\" or \"5/4\"")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ExactRat, E> {
        Ok(ExactRat(BigRational::from_integer(v.into())))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExactRat, E> {
        Ok(ExactRat(BigRational::from_integer(v.into())))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<ExactRat, E> {
        Err(E::custom(format!("floating-point value {v} is not exact; quote it as a string")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ExactRat, E> {
        parse_rat(v).map(ExactRat).map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for ExactRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<ExactRat, D::Error> {
        d.deserialize_any(RatVisitor)
    }
}

/// Serde adapter for `BigInt` fields as decimal strings.
pub mod int_string {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        let r = ExactRat::deserialize(d)?.0;
        if !r.is_integer() {
            return Err(de::Error::custom("expected an integer"));
        }
        Ok(r.to_integer())
    }
}

/// Serde adapter for `BigRational` fields as strings.
pub mod rat_string {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rat_to_string(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        Ok(ExactRat::deserialize(d)?.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in ["0", "-17", "5/4", "-1099511627776"] {
            assert_eq!(rat_to_string(&parse_rat(s).unwrap()), s);
        }
        assert_eq!(rat_to_string(&parse_rat("6/4").unwrap()), "3/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn json_accepts_ints_and_strings() {
        let v: Vec<ExactRat> = serde_json::from_str(r#"[1, "-2", "3/6"]"#).unwrap();
        assert_eq!(v[2].0, BigRational::new(1.into(), 2.into()));
        assert!(serde_json::from_str::<Vec<ExactRat>>("[1.5]").is_err());
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["1","-2","1/2"]"#);
    }
}
