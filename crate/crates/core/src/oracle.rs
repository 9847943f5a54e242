//! Brute-force Drazin inverses for small finite rings.
//!
//! The oracle tries every element as a candidate inverse and shares nothing
//! with the engine beyond ring arithmetic, so it can serve as ground truth.

use serde::Serialize;
use serde_json::Value as Json;

use crate::drazin::{drazin_finite, drazin_matrix_field, DrazinResult};
use crate::error::{Error, Result};
use crate::par::ordered_map;
use crate::ring::{enumerate_elements, value_to_json, Element, Ring, RingKind};

/// Largest ring the oracle will scan.
pub const ORACLE_CAP: u64 = 4096;

/// Finds the unique `b` with `ab = ba`, `bab = b` and `a^k = a^(k+1) b` for
/// some `k <= |R|`, returning it with the least such `k`.
pub fn brute_force_drazin(a: &Element) -> Result<DrazinResult> {
    let ring = a.ring();
    let card = ring.bounded_cardinality(ORACLE_CAP)?;
    let powers: Vec<Element> = std::iter::successors(Some(Element::one(ring)), |x| Some(x * a))
        .take(card as usize + 2)
        .collect();

    let mut found: Vec<DrazinResult> = Vec::new();
    for b in enumerate_elements(ring, ORACLE_CAP)? {
        if a * &b != &b * a || &(&b * a) * &b != b {
            continue;
        }
        let k = (0..=card as usize).find(|&k| powers[k] == &powers[k + 1] * &b);
        if let Some(k) = k {
            found.push(DrazinResult { inverse: b, index: k as u64 });
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(Error::Defect(format!("no Drazin inverse found for {a} in a finite ring"))),
        n => Err(Error::Defect(format!("{n} distinct Drazin inverses found for {a}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub element: Element,
    pub strategy: &'static str,
    pub engine: Option<DrazinResult>,
    pub oracle: DrazinResult,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossValidation {
    pub ring: Ring,
    pub elements_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CrossValidation {
    pub fn to_json(&self) -> Json {
        #[derive(Serialize)]
        struct MismatchRepr {
            element: Json,
            strategy: &'static str,
            engine: Option<(Json, u64)>,
            oracle: (Json, u64),
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            ring: &'a Ring,
            elements_checked: usize,
            mismatches: usize,
            details: Vec<MismatchRepr>,
        }
        let v = |e: &Element| value_to_json(e.ring(), e.value());
        let details = self
            .mismatches
            .iter()
            .map(|m| MismatchRepr {
                element: v(&m.element),
                strategy: m.strategy,
                engine: m.engine.as_ref().map(|r| (v(&r.inverse), r.index)),
                oracle: (v(&m.oracle.inverse), m.oracle.index),
            })
            .collect();
        serde_json::to_value(Repr {
            ring: &self.ring,
            elements_checked: self.elements_checked,
            mismatches: self.mismatches.len(),
            details,
        })
        .expect("summary serialises")
    }
}

fn check_element(a: &Element) -> Result<Vec<Mismatch>> {
    let oracle = brute_force_drazin(a)?;
    let mut strategies: Vec<(&'static str, Option<DrazinResult>)> =
        vec![("finite-power-cycle", drazin_finite(a).ok())];
    if let RingKind::Matrix { base, .. } = a.ring().kind() {
        if base.is_field() {
            strategies.push(("matrix-field-rank", drazin_matrix_field(a).ok()));
        }
    }
    Ok(strategies
        .into_iter()
        .filter(|(_, engine)| engine.as_ref() != Some(&oracle))
        .map(|(strategy, engine)| Mismatch { element: a.clone(), strategy, engine, oracle: oracle.clone() })
        .collect())
}

/// Compares every engine strategy with the oracle on every element of `ring`.
pub fn cross_validate(ring: &Ring, jobs: usize) -> Result<CrossValidation> {
    let elements: Vec<Element> = enumerate_elements(ring, ORACLE_CAP)?.collect();
    let per_element = ordered_map(&elements, jobs, check_element);
    let mut mismatches = Vec::new();
    for m in per_element {
        mismatches.extend(m?);
    }
    Ok(CrossValidation { ring: ring.clone(), elements_checked: elements.len(), mismatches })
}
