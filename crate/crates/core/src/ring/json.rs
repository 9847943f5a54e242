//! JSON encoding of element payloads.
//!
//! Residues and integers are JSON numbers (integers outside the `i64` range
//! fall back to decimal strings), rationals are `"num/den"` strings,
//! matrices are arrays of rows and product elements are `[left, right]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value as Json};

use super::{Element, Ring, RingKind, Value};
use crate::error::{Error, Result};

fn int_to_json(k: &BigInt) -> Json {
    match k.to_i64() {
        Some(small) => json!(small),
        None => Json::String(k.to_string()),
    }
}

pub fn value_to_json(ring: &Ring, value: &Value) -> Json {
    match (ring.kind(), value) {
        (_, Value::Residue(r)) => json!(r),
        (_, Value::Int(k)) => int_to_json(k),
        (_, Value::Rat(q)) => Json::String(format!("{}/{}", q.numer(), q.denom())),
        (RingKind::Matrix { dim, base }, Value::Matrix(entries)) => Json::Array(
            entries
                .chunks(*dim)
                .map(|row| Json::Array(row.iter().map(|e| value_to_json(base, e)).collect()))
                .collect(),
        ),
        (RingKind::Product { left, right }, Value::Pair(a, b)) => {
            Json::Array(vec![value_to_json(left, a), value_to_json(right, b)])
        }
        _ => unreachable!("value shape does not match ring {ring}"),
    }
}

fn parse_int(json: &Json) -> Result<BigInt> {
    match json {
        Json::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(Error::InvalidElement(format!("{n} is not an integer")))
            }
        }
        Json::String(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| Error::InvalidElement(format!("{s:?} is not an integer"))),
        other => Err(Error::InvalidElement(format!("expected an integer, found {other}"))),
    }
}

fn parse_rational(json: &Json) -> Result<BigRational> {
    if let Json::String(s) = json {
        if let Some((num, den)) = s.split_once('/') {
            let num = parse_int(&Json::String(num.to_string()))?;
            let den = parse_int(&Json::String(den.to_string()))?;
            if den.is_zero() {
                return Err(Error::InvalidElement(format!("{s:?} has a zero denominator")));
            }
            return Ok(BigRational::new(num, den));
        }
    }
    parse_int(json).map(BigRational::from_integer)
}

/// Decodes a payload for `ring`. Integer inputs to modular rings are reduced;
/// fractions are brought to lowest terms.
pub fn value_from_json(ring: &Ring, json: &Json) -> Result<Value> {
    match ring.kind() {
        RingKind::Modular { .. } | RingKind::PrimeField { .. } | RingKind::Integers => {
            Ok(ring.int_value(&parse_int(json)?))
        }
        RingKind::Rationals => Ok(Value::Rat(parse_rational(json)?)),
        RingKind::Matrix { dim, base } => {
            let rows = json
                .as_array()
                .ok_or_else(|| Error::InvalidElement("matrix value must be an array of rows".into()))?;
            if rows.len() != *dim {
                return Err(Error::DimensionMismatch { expected: *dim, found: rows.len() });
            }
            let mut entries = Vec::with_capacity(dim * dim);
            for row in rows {
                let row = row
                    .as_array()
                    .ok_or_else(|| Error::InvalidElement("matrix row must be an array".into()))?;
                if row.len() != *dim {
                    return Err(Error::DimensionMismatch { expected: *dim, found: row.len() });
                }
                for entry in row {
                    entries.push(value_from_json(base, entry)?);
                }
            }
            Ok(Value::Matrix(entries))
        }
        RingKind::Product { left, right } => match json.as_array().map(Vec::as_slice) {
            Some([a, b]) => Ok(Value::Pair(
                Box::new(value_from_json(left, a)?),
                Box::new(value_from_json(right, b)?),
            )),
            _ => Err(Error::InvalidElement("product value must be a [left, right] pair".into())),
        },
    }
}

impl Element {
    pub fn to_json(&self) -> Json {
        json!({ "ring": self.ring(), "value": value_to_json(self.ring(), self.value()) })
    }

    pub fn from_json(json: &Json) -> Result<Element> {
        let obj = json
            .as_object()
            .ok_or_else(|| Error::InvalidElement("element must be a JSON object".into()))?;
        let ring_json = obj
            .get("ring")
            .ok_or_else(|| Error::InvalidElement("missing \"ring\"".into()))?;
        let ring = Ring::deserialize(ring_json).map_err(|e| Error::InvalidRing(e.to_string()))?;
        let value_json = obj
            .get("value")
            .ok_or_else(|| Error::InvalidElement("missing \"value\"".into()))?;
        let value = value_from_json(&ring, value_json)?;
        Element::new(&ring, value)
    }
}

#[derive(Serialize)]
struct ElementRepr<'a> {
    ring: &'a Ring,
    value: Json,
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr { ring: self.ring(), value: value_to_json(self.ring(), self.value()) }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = Json::deserialize(deserializer)?;
        Element::from_json(&json).map_err(serde::de::Error::custom)
    }
}
