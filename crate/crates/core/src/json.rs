//! JSON number helpers: integers of any size written as bare JSON numbers,
//! and floats written with 17 significant digits.

use num_bigint::BigInt;
use serde::de::{self, Deserializer, Visitor};
use serde::ser::{Error as _, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;
use std::fmt;
use std::str::FromStr;

/// Arbitrary-precision integer that serialises as a plain JSON number.
///
/// Deserialisation accepts JSON integers and decimal strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigNum(pub BigInt);

impl Serialize for BigNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(self.0.to_string()).map_err(S::Error::custom)?;
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BigNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct BigNumVisitor;

        impl Visitor<'_> for BigNumVisitor {
            type Value = BigNum;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigNum, E> {
                Ok(BigNum(BigInt::from(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigNum, E> {
                Ok(BigNum(BigInt::from(v)))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<BigNum, E> {
                if v.fract() == 0.0 && v.abs() < 9.0e15 {
                    Ok(BigNum(BigInt::from(v as i64)))
                } else {
                    Err(E::custom(format!("{v} is not an integer")))
                }
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<BigNum, E> {
                BigInt::from_str(v.trim()).map(BigNum).map_err(|_| E::custom(format!("{v:?} is not an integer")))
            }
        }

        deserializer.deserialize_any(BigNumVisitor)
    }
}

/// Float that serialises with 17 significant digits (`null` when not finite).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sig17(pub f64);

impl Sig17 {
    pub fn text(self) -> String {
        format_sig17(self.0)
    }
}

/// 17 significant digits in scientific notation; `NaN`/`inf` map to `null`.
pub fn format_sig17(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

impl Serialize for Sig17 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(format_sig17(self.0)).map_err(S::Error::custom)?;
        raw.serialize(serializer)
    }
}

impl From<f64> for Sig17 {
    fn from(x: f64) -> Self {
        Sig17(x)
    }
}
