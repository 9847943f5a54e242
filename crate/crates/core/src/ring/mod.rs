//! Concrete rings with exact arithmetic.
//!
//! A [`Ring`] is a cheap, shareable descriptor; an [`Element`] pairs a
//! descriptor with a canonical [`Value`]. Every binary operation on elements
//! checks that both operands live in the same ring.

mod enumerate;
mod json;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use enumerate::{enumerate_elements, Elements, FamilyMode, IdempotentFamily, DEFAULT_CAP};
pub use json::{value_from_json, value_to_json};

/// Shape of a ring descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingKind {
    Modular { n: u64 },
    Integers,
    Matrix { dim: usize, base: Ring },
    Product { left: Ring, right: Ring },
    PrimeField { p: u64 },
    Rationals,
}

/// A validated ring descriptor. Cloning is a reference-count bump.
#[derive(Clone, Debug, Eq, Hash)]
pub struct Ring(Arc<RingKind>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Serialize for Ring {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Ring {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let kind = RingKind::deserialize(deserializer)?;
        Ring::from_kind(kind).map_err(serde::de::Error::custom)
    }
}

/// Canonical payload of a ring element.
///
/// Residues live in `[0, n)`, rationals are kept in lowest terms with a
/// positive denominator, matrices are stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Residue(u64),
    Int(BigInt),
    Rat(BigRational),
    Matrix(Vec<Value>),
    Pair(Box<Value>, Box<Value>),
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % small == 0 {
            return n == small;
        }
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    (a as u128 * b as u128 % n as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

impl Ring {
    pub fn from_kind(kind: RingKind) -> Result<Ring> {
        match &kind {
            RingKind::Modular { n } if *n < 2 => {
                return Err(Error::InvalidRing(format!("modulus must be at least 2, got {n}")))
            }
            RingKind::PrimeField { p } if !is_prime(*p) => {
                return Err(Error::InvalidRing(format!("{p} is not prime")))
            }
            RingKind::Matrix { dim: 0, .. } => {
                return Err(Error::InvalidRing("matrix dimension must be at least 1".into()))
            }
            _ => {}
        }
        Ok(Ring(Arc::new(kind)))
    }

    pub fn modular(n: u64) -> Result<Ring> {
        Ring::from_kind(RingKind::Modular { n })
    }

    pub fn prime_field(p: u64) -> Result<Ring> {
        Ring::from_kind(RingKind::PrimeField { p })
    }

    pub fn integers() -> Ring {
        Ring(Arc::new(RingKind::Integers))
    }

    pub fn rationals() -> Ring {
        Ring(Arc::new(RingKind::Rationals))
    }

    pub fn matrix(dim: usize, base: Ring) -> Result<Ring> {
        Ring::from_kind(RingKind::Matrix { dim, base })
    }

    pub fn product(left: Ring, right: Ring) -> Ring {
        Ring(Arc::new(RingKind::Product { left, right }))
    }

    pub fn kind(&self) -> &RingKind {
        &self.0
    }

    pub fn is_finite(&self) -> bool {
        match self.kind() {
            RingKind::Modular { .. } | RingKind::PrimeField { .. } => true,
            RingKind::Integers | RingKind::Rationals => false,
            RingKind::Matrix { base, .. } => base.is_finite(),
            RingKind::Product { left, right } => left.is_finite() && right.is_finite(),
        }
    }

    /// Number of elements, or `None` for an infinite ring.
    pub fn cardinality(&self) -> Option<BigUint> {
        match self.kind() {
            RingKind::Modular { n } => Some(BigUint::from(*n)),
            RingKind::PrimeField { p } => Some(BigUint::from(*p)),
            RingKind::Integers | RingKind::Rationals => None,
            RingKind::Matrix { dim, base } => {
                let entries = (dim * dim) as u32;
                base.cardinality().map(|c| Pow::pow(c, entries))
            }
            RingKind::Product { left, right } => Some(left.cardinality()? * right.cardinality()?),
        }
    }

    /// Cardinality as a `u64` when the ring is finite and no larger than `cap`.
    pub fn bounded_cardinality(&self, cap: u64) -> Result<u64> {
        let card = self
            .cardinality()
            .ok_or_else(|| Error::Unsupported(format!("{self} is infinite")))?;
        match card.to_u64() {
            Some(c) if c <= cap => Ok(c),
            _ => Err(Error::ResourceLimit { what: "ring cardinality", size: card.to_string(), cap }),
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self.kind(), RingKind::PrimeField { .. } | RingKind::Rationals)
    }

    pub fn zero_value(&self) -> Value {
        match self.kind() {
            RingKind::Modular { .. } | RingKind::PrimeField { .. } => Value::Residue(0),
            RingKind::Integers => Value::Int(BigInt::zero()),
            RingKind::Rationals => Value::Rat(BigRational::zero()),
            RingKind::Matrix { dim, base } => Value::Matrix(vec![base.zero_value(); dim * dim]),
            RingKind::Product { left, right } => {
                Value::Pair(Box::new(left.zero_value()), Box::new(right.zero_value()))
            }
        }
    }

    pub fn one_value(&self) -> Value {
        self.int_value(&BigInt::one())
    }

    /// Image of an integer under the unique unital map from `Z`.
    pub fn int_value(&self, k: &BigInt) -> Value {
        match self.kind() {
            RingKind::Modular { n } | RingKind::PrimeField { p: n } => {
                let r = k.mod_floor_u64(*n);
                Value::Residue(r)
            }
            RingKind::Integers => Value::Int(k.clone()),
            RingKind::Rationals => Value::Rat(BigRational::from_integer(k.clone())),
            RingKind::Matrix { dim, base } => {
                let mut entries = vec![base.zero_value(); dim * dim];
                let diag = base.int_value(k);
                for i in 0..*dim {
                    entries[i * dim + i] = diag.clone();
                }
                Value::Matrix(entries)
            }
            RingKind::Product { left, right } => {
                Value::Pair(Box::new(left.int_value(k)), Box::new(right.int_value(k)))
            }
        }
    }

    pub fn add_values(&self, x: &Value, y: &Value) -> Value {
        match (self.kind(), x, y) {
            (RingKind::Modular { n } | RingKind::PrimeField { p: n }, Value::Residue(a), Value::Residue(b)) => {
                Value::Residue(((*a as u128 + *b as u128) % *n as u128) as u64)
            }
            (RingKind::Integers, Value::Int(a), Value::Int(b)) => Value::Int(a + b),
            (RingKind::Rationals, Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (RingKind::Matrix { base, .. }, Value::Matrix(a), Value::Matrix(b)) => {
                Value::Matrix(a.iter().zip(b).map(|(s, t)| base.add_values(s, t)).collect())
            }
            (RingKind::Product { left, right }, Value::Pair(a0, a1), Value::Pair(b0, b1)) => Value::Pair(
                Box::new(left.add_values(a0, b0)),
                Box::new(right.add_values(a1, b1)),
            ),
            _ => unreachable!("value shape does not match ring {self}"),
        }
    }

    pub fn neg_value(&self, x: &Value) -> Value {
        match (self.kind(), x) {
            (RingKind::Modular { n } | RingKind::PrimeField { p: n }, Value::Residue(a)) => {
                Value::Residue(if *a == 0 { 0 } else { n - a })
            }
            (RingKind::Integers, Value::Int(a)) => Value::Int(-a),
            (RingKind::Rationals, Value::Rat(a)) => Value::Rat(-a),
            (RingKind::Matrix { base, .. }, Value::Matrix(a)) => {
                Value::Matrix(a.iter().map(|s| base.neg_value(s)).collect())
            }
            (RingKind::Product { left, right }, Value::Pair(a0, a1)) => {
                Value::Pair(Box::new(left.neg_value(a0)), Box::new(right.neg_value(a1)))
            }
            _ => unreachable!("value shape does not match ring {self}"),
        }
    }

    pub fn mul_values(&self, x: &Value, y: &Value) -> Value {
        match (self.kind(), x, y) {
            (RingKind::Modular { n } | RingKind::PrimeField { p: n }, Value::Residue(a), Value::Residue(b)) => {
                Value::Residue(mul_mod(*a, *b, *n))
            }
            (RingKind::Integers, Value::Int(a), Value::Int(b)) => Value::Int(a * b),
            (RingKind::Rationals, Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (RingKind::Matrix { dim, base }, Value::Matrix(a), Value::Matrix(b)) => {
                let d = *dim;
                let mut out = Vec::with_capacity(d * d);
                for i in 0..d {
                    for j in 0..d {
                        let mut acc = base.zero_value();
                        for k in 0..d {
                            let t = base.mul_values(&a[i * d + k], &b[k * d + j]);
                            acc = base.add_values(&acc, &t);
                        }
                        out.push(acc);
                    }
                }
                Value::Matrix(out)
            }
            (RingKind::Product { left, right }, Value::Pair(a0, a1), Value::Pair(b0, b1)) => Value::Pair(
                Box::new(left.mul_values(a0, b0)),
                Box::new(right.mul_values(a1, b1)),
            ),
            _ => unreachable!("value shape does not match ring {self}"),
        }
    }

    /// Multiplicative inverse in a field; `None` for zero or non-fields.
    pub fn field_inverse(&self, x: &Value) -> Option<Value> {
        match (self.kind(), x) {
            (RingKind::PrimeField { p }, Value::Residue(a)) if *a != 0 => {
                Some(Value::Residue(pow_mod(*a, p - 2, *p)))
            }
            (RingKind::Rationals, Value::Rat(a)) if !a.is_zero() => Some(Value::Rat(a.recip())),
            _ => None,
        }
    }

    /// Checks that `value` has the shape of this ring and is canonical.
    pub fn check_value(&self, value: &Value) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidElement(msg));
        match (self.kind(), value) {
            (RingKind::Modular { n } | RingKind::PrimeField { p: n }, Value::Residue(a)) => {
                if a < n {
                    Ok(())
                } else {
                    bad(format!("residue {a} not in [0, {n})"))
                }
            }
            (RingKind::Integers, Value::Int(_)) => Ok(()),
            (RingKind::Rationals, Value::Rat(r)) => {
                let reduced = BigRational::new(r.numer().clone(), r.denom().clone());
                if r.denom().is_positive() && reduced.numer() == r.numer() {
                    Ok(())
                } else {
                    bad(format!("fraction {r} is not in lowest terms"))
                }
            }
            (RingKind::Matrix { dim, base }, Value::Matrix(entries)) => {
                if entries.len() != dim * dim {
                    return Err(Error::DimensionMismatch { expected: dim * dim, found: entries.len() });
                }
                entries.iter().try_for_each(|e| base.check_value(e))
            }
            (RingKind::Product { left, right }, Value::Pair(a, b)) => {
                left.check_value(a)?;
                right.check_value(b)
            }
            _ => bad(format!("value shape does not match ring {self}")),
        }
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, n: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, n: u64) -> u64 {
        let m = BigInt::from(n);
        let r = ((self % &m) + &m) % &m;
        r.to_u64().expect("residue fits in u64")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            RingKind::Modular { n } => write!(f, "Z_{n}"),
            RingKind::PrimeField { p } => write!(f, "F_{p}"),
            RingKind::Integers => write!(f, "Z"),
            RingKind::Rationals => write!(f, "Q"),
            RingKind::Matrix { dim, base } => write!(f, "M_{dim}({base})"),
            RingKind::Product { left, right } => write!(f, "({left} x {right})"),
        }
    }
}

/// An immutable element of a concrete ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    ring: Ring,
    value: Value,
}

impl Element {
    pub fn new(ring: &Ring, value: Value) -> Result<Element> {
        ring.check_value(&value)?;
        Ok(Element { ring: ring.clone(), value })
    }

    pub(crate) fn from_canonical(ring: &Ring, value: Value) -> Element {
        debug_assert!(ring.check_value(&value).is_ok());
        Element { ring: ring.clone(), value }
    }

    pub fn zero(ring: &Ring) -> Element {
        Element::from_canonical(ring, ring.zero_value())
    }

    pub fn one(ring: &Ring) -> Element {
        Element::from_canonical(ring, ring.one_value())
    }

    /// The integer `k` viewed as `k * 1` in `ring`.
    pub fn from_int(ring: &Ring, k: i64) -> Element {
        Element::from_canonical(ring, ring.int_value(&BigInt::from(k)))
    }

    /// The fraction `num/den` in the rationals.
    pub fn rational(ring: &Ring, num: i64, den: i64) -> Result<Element> {
        if !matches!(ring.kind(), RingKind::Rationals) {
            return Err(Error::InvalidElement(format!("{ring} is not the rationals")));
        }
        if den == 0 {
            return Err(Error::InvalidElement("zero denominator".into()));
        }
        let r = BigRational::new(BigInt::from(num), BigInt::from(den));
        Ok(Element::from_canonical(ring, Value::Rat(r)))
    }

    /// Builds a square matrix from element entries given row by row.
    pub fn matrix(ring: &Ring, rows: Vec<Vec<Element>>) -> Result<Element> {
        let RingKind::Matrix { dim, base } = ring.kind() else {
            return Err(Error::InvalidElement(format!("{ring} is not a matrix ring")));
        };
        if rows.len() != *dim {
            return Err(Error::DimensionMismatch { expected: *dim, found: rows.len() });
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != *dim {
                return Err(Error::DimensionMismatch { expected: *dim, found: row.len() });
            }
            for e in row {
                e.expect_ring(base)?;
                entries.push(e.value);
            }
        }
        Ok(Element::from_canonical(ring, Value::Matrix(entries)))
    }

    /// Square matrix whose entries are integers mapped into the base ring.
    pub fn from_int_rows<const N: usize>(ring: &Ring, rows: &[[i64; N]]) -> Result<Element> {
        let RingKind::Matrix { base, .. } = ring.kind() else {
            return Err(Error::InvalidElement(format!("{ring} is not a matrix ring")));
        };
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&k| Element::from_int(base, k)).collect())
            .collect();
        Element::matrix(ring, rows)
    }

    pub fn pair(ring: &Ring, left: Element, right: Element) -> Result<Element> {
        let RingKind::Product { left: l, right: r } = ring.kind() else {
            return Err(Error::InvalidElement(format!("{ring} is not a product ring")));
        };
        left.expect_ring(l)?;
        right.expect_ring(r)?;
        Ok(Element::from_canonical(ring, Value::Pair(Box::new(left.value), Box::new(right.value))))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn into_value(self) -> Value {
        self.value
    }

    pub(crate) fn expect_ring(&self, ring: &Ring) -> Result<()> {
        if &self.ring == ring {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: self.ring.to_string(), right: ring.to_string() })
        }
    }

    pub fn same_ring(&self, other: &Element) -> Result<()> {
        other.expect_ring(&self.ring)
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        self.same_ring(other)?;
        Ok(Element::from_canonical(&self.ring, self.ring.add_values(&self.value, &other.value)))
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element> {
        self.same_ring(other)?;
        let neg = self.ring.neg_value(&other.value);
        Ok(Element::from_canonical(&self.ring, self.ring.add_values(&self.value, &neg)))
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element> {
        self.same_ring(other)?;
        Ok(Element::from_canonical(&self.ring, self.ring.mul_values(&self.value, &other.value)))
    }

    pub fn pow(&self, mut k: u64) -> Element {
        let mut acc = self.ring.one_value();
        let mut base = self.value.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.ring.mul_values(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.ring.mul_values(&base, &base);
            }
        }
        Element::from_canonical(&self.ring, acc)
    }

    pub fn is_zero(&self) -> bool {
        self.value == self.ring.zero_value()
    }

    pub fn is_one(&self) -> bool {
        self.value == self.ring.one_value()
    }

    pub fn is_idempotent(&self) -> bool {
        self.ring.mul_values(&self.value, &self.value) == self.value
    }

    /// `1 - self`.
    pub fn complement(&self) -> Element {
        &Element::one(&self.ring) - self
    }

    pub fn commutes_with(&self, other: &Element) -> Result<bool> {
        Ok(self.checked_mul(other)? == other.checked_mul(self)?)
    }

    /// Row-major matrix entries as elements of the base ring.
    pub fn entries(&self) -> Option<Vec<Element>> {
        match (self.ring.kind(), &self.value) {
            (RingKind::Matrix { base, .. }, Value::Matrix(v)) => {
                Some(v.iter().map(|e| Element::from_canonical(base, e.clone())).collect())
            }
            _ => None,
        }
    }

    /// Components of an element of a product ring.
    pub fn components(&self) -> Option<(Element, Element)> {
        match (self.ring.kind(), &self.value) {
            (RingKind::Product { left, right }, Value::Pair(a, b)) => Some((
                Element::from_canonical(left, (**a).clone()),
                Element::from_canonical(right, (**b).clone()),
            )),
            _ => None,
        }
    }

    /// Compact JSON rendering of the payload, used for display and ordering.
    pub fn value_json(&self) -> String {
        value_to_json(&self.ring, &self.value).to_string()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.value_json(), self.ring)
    }
}

// Operator impls panic on a ring mismatch; use the `checked_*` methods when
// operands come from untrusted input.
impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::from_canonical(&self.ring, self.ring.neg_value(&self.value))
    }
}
