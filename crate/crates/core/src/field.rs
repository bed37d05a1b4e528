//! Coefficient fields for homology and Betti numbers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Field of coefficients: ℚ or `GF(p)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u32),
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    (2..)
        .take_while(|d| d * d <= p)
        .all(|d| !p.is_multiple_of(d))
}

impl Field {
    pub const GF2: Field = Field::Prime(2);

    pub fn prime(p: u32) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => f.write_str("q"),
            Field::Prime(2) => f.write_str("f2"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        match s.trim().to_ascii_lowercase().as_str() {
            "q" | "qq" | "rationals" => Ok(Field::Rationals),
            "f2" | "gf2" => Ok(Field::GF2),
            other => {
                let digits = other
                    .strip_prefix("fp:")
                    .or_else(|| other.strip_prefix("gf"))
                    .or_else(|| other.strip_prefix('f'))
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown field `{s}`")))?;
                let p: u32 = digits
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("unknown field `{s}`")))?;
                Field::prime(p)
            }
        }
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for (text, field) in [
            ("q", Field::Rationals),
            ("f2", Field::GF2),
            ("fp:3", Field::Prime(3)),
            ("fp:32003", Field::Prime(32003)),
        ] {
            assert_eq!(text.parse::<Field>().unwrap(), field);
            assert_eq!(field.to_string(), text);
        }
        assert_eq!("fp:2".parse::<Field>().unwrap(), Field::GF2);
        assert_eq!("fp:4".parse::<Field>(), Err(Error::NotPrime(4)));
        assert!("fp:".parse::<Field>().is_err());
        assert!("reals".parse::<Field>().is_err());
        assert_eq!(Field::prime(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn serde_as_tag() {
        let json = serde_json::to_string(&Field::Prime(5)).unwrap();
        assert_eq!(json, "\"fp:5\"");
        assert_eq!(
            serde_json::from_str::<Field>(&json).unwrap(),
            Field::Prime(5)
        );
    }
}
