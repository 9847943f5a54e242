//! The command-line front end, as plain functions returning captured output.
//!
//! Exit codes: 0 success, 1 property violation or defect, 2 bad input,
//! 3 non-member or undecidable verdict from `compute`.

use serde::Serialize;
use serde_json::{json, Value as Json};

use crate::drazin::{drazin_membership, Verdict};
use crate::error::Error;
use crate::oracle::cross_validate;
use crate::report::Theorem;
use crate::ring::{enumerate_elements, value_to_json, Element, IdempotentFamily, Ring, RingKind, DEFAULT_CAP};
use crate::theorems::{check_pairs, SweepSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_VERDICT: i32 = 3;

/// Captured result of one command.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    pub fn error(code: i32, message: impl Into<String>) -> Outcome {
        let message = message.into();
        Outcome { code, stdout: format!("{}\n", json!({ "error": message })), stderr: format!("error: {message}\n") }
    }
}

fn classify(e: &Error) -> i32 {
    match e {
        Error::Defect(_) | Error::AxiomViolation(_) => EXIT_VIOLATION,
        _ => EXIT_BAD_INPUT,
    }
}

fn line(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("output serialises");
    s.push('\n');
    s
}

/// Parses a ring descriptor from JSON text.
pub fn parse_ring(text: &str) -> Result<Ring, Outcome> {
    serde_json::from_str::<Ring>(text).map_err(|e| Outcome::error(EXIT_BAD_INPUT, format!("invalid ring: {e}")))
}

fn is_m2z(ring: &Ring) -> bool {
    matches!(ring.kind(), RingKind::Matrix { dim: 2, base } if matches!(base.kind(), RingKind::Integers))
}

fn family_for(ring: &Ring, bound: Option<u64>) -> Result<IdempotentFamily, Outcome> {
    if ring.is_finite() {
        return Ok(IdempotentFamily::exhaustive(ring));
    }
    if is_m2z(ring) {
        return match bound {
            Some(b) if b > 0 => Ok(IdempotentFamily::parametrized_2x2(b)),
            _ => Err(Outcome::error(EXIT_BAD_INPUT, "M_2(Z) needs a positive --bound for its idempotent family")),
        };
    }
    if matches!(ring.kind(), RingKind::Integers) {
        // Z is a domain, so 0 and 1 are its only idempotents.
        return Ok(IdempotentFamily::explicit(ring, vec![Element::zero(ring), Element::one(ring)]));
    }
    Err(Outcome::error(EXIT_BAD_INPUT, format!("no idempotent family available for {ring}")))
}

/// `compute`: Drazin inverse of one element given as JSON.
pub fn compute(input: &str) -> Outcome {
    let json: Json = match serde_json::from_str(input) {
        Ok(j) => j,
        Err(e) => return Outcome::error(EXIT_BAD_INPUT, format!("malformed JSON: {e}")),
    };
    let element = match Element::from_json(&json) {
        Ok(e) => e,
        Err(e) => return Outcome::error(EXIT_BAD_INPUT, e.to_string()),
    };
    let decision = drazin_membership(&element);
    match (decision.verdict, decision.witness) {
        (Verdict::Member, Some(w)) => {
            #[derive(Serialize)]
            struct Computed {
                inverse: Element,
                index: u64,
                method: crate::drazin::Method,
            }
            Outcome::ok(line(&Computed { inverse: w.inverse, index: w.index, method: decision.method }))
        }
        (verdict, _) => Outcome {
            code: EXIT_VERDICT,
            stdout: line(&json!({ "verdict": verdict, "method": decision.method })),
            stderr: format!("{element} is {verdict} ({})\n", decision.method),
        },
    }
}

/// `verify`: sweeps the selected theorems over the ring's idempotent family.
/// Prints one JSON line per checked pair, then a summary line.
pub fn verify(ring_text: &str, theorem: &str, bound: Option<u64>, jobs: usize) -> Outcome {
    let ring = match parse_ring(ring_text) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let theorems: Vec<Theorem> = if theorem == "all" {
        Theorem::ALL.to_vec()
    } else {
        match theorem.parse() {
            Ok(t) => vec![t],
            Err(e) => return Outcome::error(EXIT_BAD_INPUT, format!("{e}")),
        }
    };
    let family = match family_for(&ring, bound) {
        Ok(f) => f,
        Err(o) => return o,
    };

    let mut stdout = String::new();
    let mut summaries = Vec::new();
    for t in theorems {
        let reports = match check_pairs(t, &family, &family, jobs.max(1), DEFAULT_CAP) {
            Ok(r) => r,
            Err(e) => return Outcome::error(classify(&e), e.to_string()),
        };
        for r in &reports {
            stdout.push_str(&line(r));
        }
        summaries.push(SweepSummary::from_reports(t, &reports));
    }
    let violations: usize = summaries.iter().map(|s| s.violations.len()).sum();
    let pairs: usize = summaries.iter().map(|s| s.pairs_checked).sum();
    stdout.push_str(&line(&json!({
        "summary": {
            "ring": ring,
            "pairs_checked": pairs,
            "violations": violations,
            "theorems": summaries.iter().map(SweepSummary::to_json).collect::<Vec<_>>(),
        }
    })));
    let code = if violations == 0 { EXIT_OK } else { EXIT_VIOLATION };
    let stderr = if violations == 0 { String::new() } else { format!("{violations} violation(s) found\n") };
    Outcome { code, stdout, stderr }
}

/// `oracle`: cross-validates the engine against brute force on every element.
pub fn oracle(ring_text: &str, jobs: usize) -> Outcome {
    let ring = match parse_ring(ring_text) {
        Ok(r) => r,
        Err(o) => return o,
    };
    match cross_validate(&ring, jobs.max(1)) {
        Ok(cv) => {
            let code = if cv.mismatches.is_empty() { EXIT_OK } else { EXIT_VIOLATION };
            let stderr =
                if code == EXIT_OK { String::new() } else { format!("{} mismatch(es)\n", cv.mismatches.len()) };
            Outcome { code, stdout: line(&cv.to_json()), stderr }
        }
        Err(e) => Outcome::error(classify(&e), e.to_string()),
    }
}

/// `idempotents`: lists the idempotent family of a ring as bare payloads.
pub fn idempotents(ring_text: &str, bound: Option<u64>) -> Outcome {
    let ring = match parse_ring(ring_text) {
        Ok(r) => r,
        Err(o) => return o,
    };
    let family = if ring.is_finite() {
        if let Err(e) = enumerate_elements(&ring, DEFAULT_CAP) {
            return Outcome::error(EXIT_BAD_INPUT, e.to_string());
        }
        IdempotentFamily::exhaustive(&ring)
    } else if is_m2z(&ring) {
        match family_for(&ring, bound) {
            Ok(f) => f,
            Err(o) => return o,
        }
    } else {
        return Outcome::error(EXIT_BAD_INPUT, format!("{ring} is infinite; only M_2(Z) with --bound is supported"));
    };
    match family.idempotents(DEFAULT_CAP) {
        Ok(ids) => {
            let values: Vec<Json> = ids.iter().map(|e| value_to_json(e.ring(), e.value())).collect();
            Outcome::ok(line(&values))
        }
        Err(e) => Outcome::error(classify(&e), e.to_string()),
    }
}
