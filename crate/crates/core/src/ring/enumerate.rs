//! Exhaustive element streams and idempotent families.

use num_bigint::BigInt;

use super::{Element, Ring, RingKind, Value};
use crate::error::{Error, Result};

/// Default cardinality cap for exhaustive streams.
pub const DEFAULT_CAP: u64 = 65_536;

/// Iterator over every element of a finite ring, in mixed-radix index order.
#[derive(Clone, Debug)]
pub struct Elements {
    ring: Ring,
    next: u64,
    len: u64,
}

impl Iterator for Elements {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        if self.next >= self.len {
            return None;
        }
        let value = value_at(&self.ring, self.next);
        self.next += 1;
        Some(Element::from_canonical(&self.ring, value))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = (self.len - self.next) as usize;
        (rest, Some(rest))
    }
}

impl ExactSizeIterator for Elements {}

/// Streams every element of `ring` exactly once.
pub fn enumerate_elements(ring: &Ring, cap: u64) -> Result<Elements> {
    let len = ring.bounded_cardinality(cap)?;
    Ok(Elements { ring: ring.clone(), next: 0, len })
}

// Callers guarantee `index < |ring|` and that the ring is finite.
fn value_at(ring: &Ring, index: u64) -> Value {
    match ring.kind() {
        RingKind::Modular { .. } | RingKind::PrimeField { .. } => Value::Residue(index),
        RingKind::Matrix { dim, base } => {
            let radix = base.bounded_cardinality(u64::MAX).expect("finite base");
            let count = dim * dim;
            let mut entries = vec![Value::Residue(0); count];
            let mut rest = index;
            // First entry is the most significant digit.
            for slot in entries.iter_mut().rev() {
                *slot = value_at(base, rest % radix);
                rest /= radix;
            }
            Value::Matrix(entries)
        }
        RingKind::Product { left, right } => {
            let radix = right.bounded_cardinality(u64::MAX).expect("finite factor");
            Value::Pair(Box::new(value_at(left, index / radix)), Box::new(value_at(right, index % radix)))
        }
        RingKind::Integers | RingKind::Rationals => unreachable!("infinite ring"),
    }
}

/// How a family of idempotents is produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyMode {
    /// Every idempotent of a finite ring.
    Exhaustive,
    /// `[[a, b], [c, 1 - a]]` with `bc = a - a^2` and `|a|, |b|, |c| <= bound`,
    /// plus zero and the identity, in `M_2(Z)`.
    Parametrized2x2 { bound: u64 },
    Explicit(Vec<Element>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentFamily {
    pub ring: Ring,
    pub mode: FamilyMode,
}

impl IdempotentFamily {
    pub fn exhaustive(ring: &Ring) -> IdempotentFamily {
        IdempotentFamily { ring: ring.clone(), mode: FamilyMode::Exhaustive }
    }

    pub fn parametrized_2x2(bound: u64) -> IdempotentFamily {
        let ring = Ring::matrix(2, Ring::integers()).expect("dimension 2 is valid");
        IdempotentFamily { ring, mode: FamilyMode::Parametrized2x2 { bound } }
    }

    pub fn explicit(ring: &Ring, elements: Vec<Element>) -> IdempotentFamily {
        IdempotentFamily { ring: ring.clone(), mode: FamilyMode::Explicit(elements) }
    }

    /// Materialises the family. `cap` bounds exhaustive enumeration.
    pub fn idempotents(&self, cap: u64) -> Result<Vec<Element>> {
        match &self.mode {
            FamilyMode::Exhaustive => Ok(enumerate_elements(&self.ring, cap)?.filter(Element::is_idempotent).collect()),
            FamilyMode::Parametrized2x2 { bound } => {
                let is_m2z = matches!(self.ring.kind(),
                    RingKind::Matrix { dim: 2, base } if matches!(base.kind(), RingKind::Integers));
                if !is_m2z {
                    return Err(Error::Unsupported(format!(
                        "parametrized 2x2 family requires M_2(Z), not {}",
                        self.ring
                    )));
                }
                if *bound == 0 {
                    return Err(Error::Precondition("family bound must be positive".into()));
                }
                Ok(parametrized_2x2(&self.ring, *bound as i64))
            }
            FamilyMode::Explicit(elements) => {
                for e in elements {
                    e.expect_ring(&self.ring)?;
                    if !e.is_idempotent() {
                        return Err(Error::Precondition(format!("{e} is not idempotent")));
                    }
                }
                Ok(elements.clone())
            }
        }
    }
}

fn parametrized_2x2(ring: &Ring, bound: i64) -> Vec<Element> {
    let int = |k: i64| Value::Int(BigInt::from(k));
    let mut out = vec![Element::zero(ring), Element::one(ring)];
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                if b * c == a - a * a {
                    let value = Value::Matrix(vec![int(a), int(b), int(c), int(1 - a)]);
                    out.push(Element::from_canonical(ring, value));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn stream_sizes() {
        assert_eq!(enumerate_elements(&Ring::modular(5).unwrap(), DEFAULT_CAP).unwrap().count(), 5);
        let m2f2 = Ring::matrix(2, Ring::prime_field(2).unwrap()).unwrap();
        let all: HashSet<Element> = enumerate_elements(&m2f2, DEFAULT_CAP).unwrap().collect();
        assert_eq!(all.len(), 16);
        let prod = Ring::product(Ring::modular(3).unwrap(), Ring::modular(2).unwrap());
        let all: HashSet<Element> = enumerate_elements(&prod, DEFAULT_CAP).unwrap().collect();
        assert_eq!(all.len(), 6);
    }

    #[test]
    fn enumeration_errors() {
        assert!(matches!(enumerate_elements(&Ring::integers(), DEFAULT_CAP), Err(Error::Unsupported(_))));
        let big = Ring::matrix(2, Ring::modular(17).unwrap()).unwrap();
        assert!(matches!(enumerate_elements(&big, 1000), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn exhaustive_idempotents_of_z12() {
        let r = Ring::modular(12).unwrap();
        let found: Vec<String> = IdempotentFamily::exhaustive(&r)
            .idempotents(DEFAULT_CAP)
            .unwrap()
            .iter()
            .map(Element::value_json)
            .collect();
        assert_eq!(found, ["0", "1", "4", "9"]);
    }

    #[test]
    fn exhaustive_idempotents_of_m2f2() {
        let r = Ring::matrix(2, Ring::prime_field(2).unwrap()).unwrap();
        assert_eq!(IdempotentFamily::exhaustive(&r).idempotents(DEFAULT_CAP).unwrap().len(), 8);
    }

    #[test]
    fn parametrized_family_contents() {
        let fam = IdempotentFamily::parametrized_2x2(2);
        let ids = fam.idempotents(DEFAULT_CAP).unwrap();
        let target = Element::from_int_rows(&fam.ring, &[[2, 1], [-2, -1]]).unwrap();
        assert!(ids.contains(&target));
        assert!(ids.contains(&Element::zero(&fam.ring)));
        assert!(ids.contains(&Element::one(&fam.ring)));
        assert!(ids.iter().all(Element::is_idempotent));
        // a = 0 and a = 1 give 9 solutions each, a = 2 and a = -1 give 4, a = -2 none.
        assert_eq!(ids.len(), 2 + 9 + 9 + 4 + 4);
        let distinct: HashSet<&Element> = ids.iter().collect();
        assert_eq!(distinct.len(), ids.len());
    }

    #[test]
    fn family_mode_validation() {
        let z12 = Ring::modular(12).unwrap();
        let fam = IdempotentFamily { ring: z12.clone(), mode: FamilyMode::Parametrized2x2 { bound: 2 } };
        assert!(fam.idempotents(DEFAULT_CAP).is_err());
        let fam = IdempotentFamily::explicit(&z12, vec![Element::from_int(&z12, 2)]);
        assert!(matches!(fam.idempotents(DEFAULT_CAP), Err(Error::Precondition(_))));
        assert!(IdempotentFamily::parametrized_2x2(0).idempotents(DEFAULT_CAP).is_err());
    }
}
