//! Exact rational scalars.
//!
//! `Scalar` is a canonical big rational: numerator and denominator are kept
//! coprime with a positive denominator, so structural equality is value
//! equality and `Display` prints integers without a `/1` suffix.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Result<Scalar> {
    if q == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(BigInt::from(p), BigInt::from(q)))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p"`, `"-p"` or `"p/q"` into canonical form.
pub fn parse(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Canonical text form: `"3"`, `"-7/2"`.
pub fn format(x: &Scalar) -> String {
    x.to_string()
}

pub fn checked_div(a: &Scalar, b: &Scalar) -> Result<Scalar> {
    if b.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(a / b)
    }
}

pub fn is_integer(x: &Scalar) -> bool {
    x.is_integer()
}

pub fn is_positive(x: &Scalar) -> bool {
    x.is_positive()
}

/// Binomial coefficient as a scalar; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Scalar {
    if k > n {
        return zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    BigRational::from_integer(acc)
}

/// Serde adapter storing a scalar as its canonical string; integers are
/// also accepted on input.
pub mod serde_scalar {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format(x))
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Str(String),
        Int(i64),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        match Raw::deserialize(d)? {
            Raw::Str(s) => parse(&s).map_err(de::Error::custom),
            Raw::Int(n) => Ok(int(n)),
        }
    }

    pub fn from_value(v: &serde_json::Value) -> Result<Scalar> {
        match v {
            serde_json::Value::String(s) => parse(s),
            serde_json::Value::Number(n) => n.as_i64().map(int).ok_or_else(|| {
                Error::Parse(format!("non-integer number {n}; use a \"p/q\" string"))
            }),
            other => Err(Error::Parse(format!("expected a rational, got {other}"))),
        }
    }
}

/// Serde adapter for grids of scalars.
pub mod serde_grid {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(
        g: &[Vec<Scalar>],
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<Vec<String>> = g.iter().map(|r| r.iter().map(format).collect()).collect();
        strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Vec<Scalar>>, D::Error> {
        let raw: Vec<Vec<serde_json::Value>> = Vec::deserialize(d)?;
        raw.iter()
            .map(|r| {
                r.iter()
                    .map(serde_scalar::from_value)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)
    }
}
