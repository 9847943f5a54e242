use serde::Serialize;
use serde_json::Value as Json;

use super::check;
use crate::error::Result;
use crate::par::ordered_map;
use crate::report::{EquivalenceReport, Theorem};
use crate::ring::{Element, IdempotentFamily};

/// Exact counts over a sweep. Every checked pair lands in exactly one of
/// `agreements`, `undecided` or `violations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSummary {
    pub theorem: Theorem,
    pub pairs_checked: usize,
    pub agreements: usize,
    pub undecided: usize,
    pub violations: Vec<EquivalenceReport>,
    /// Pairs whose conditions were all decided non-member.
    pub all_non_member: Vec<(Element, Element)>,
}

impl SweepSummary {
    pub fn from_reports(theorem: Theorem, reports: &[EquivalenceReport]) -> SweepSummary {
        let mut summary = SweepSummary {
            theorem,
            pairs_checked: reports.len(),
            agreements: 0,
            undecided: 0,
            violations: Vec::new(),
            all_non_member: Vec::new(),
        };
        for r in reports {
            if r.is_violation() {
                summary.violations.push(r.clone());
            } else if !r.decisive {
                summary.undecided += 1;
            } else {
                summary.agreements += 1;
            }
            if r.all_non_member() {
                summary.all_non_member.push(r.pair.clone());
            }
        }
        summary
    }

    pub fn to_json(&self) -> Json {
        #[derive(Serialize)]
        struct Repr {
            theorem: Theorem,
            pairs_checked: usize,
            agreements: usize,
            undecided: usize,
            violations: usize,
            all_non_member: Vec<(Json, Json)>,
        }
        let pair_json = |(p, q): &(Element, Element)| (value_json(p), value_json(q));
        serde_json::to_value(Repr {
            theorem: self.theorem,
            pairs_checked: self.pairs_checked,
            agreements: self.agreements,
            undecided: self.undecided,
            violations: self.violations.len(),
            all_non_member: self.all_non_member.iter().map(pair_json).collect(),
        })
        .expect("summary serialises")
    }
}

fn value_json(e: &Element) -> Json {
    crate::ring::value_to_json(e.ring(), e.value())
}

/// Family members in lexicographic order of their serialised payload, deduplicated.
pub fn sorted_family(family: &IdempotentFamily, cap: u64) -> Result<Vec<Element>> {
    let mut keyed: Vec<(String, Element)> =
        family.idempotents(cap)?.into_iter().map(|e| (e.value_json(), e)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    Ok(keyed.into_iter().map(|(_, e)| e).collect())
}

/// Checks `theorem` on every pair of the Cartesian product, `p`-major, in a
/// deterministic order regardless of `jobs`.
pub fn check_pairs(
    theorem: Theorem,
    family_p: &IdempotentFamily,
    family_q: &IdempotentFamily,
    jobs: usize,
    cap: u64,
) -> Result<Vec<EquivalenceReport>> {
    if family_p.ring != family_q.ring {
        return Err(crate::error::Error::RingMismatch {
            left: family_p.ring.to_string(),
            right: family_q.ring.to_string(),
        });
    }
    let ps = sorted_family(family_p, cap)?;
    let qs = sorted_family(family_q, cap)?;
    let pairs: Vec<(&Element, &Element)> = ps.iter().flat_map(|p| qs.iter().map(move |q| (p, q))).collect();
    ordered_map(&pairs, jobs, |(p, q)| check(theorem, p, q)).into_iter().collect()
}

pub fn sweep(
    theorem: Theorem,
    family_p: &IdempotentFamily,
    family_q: &IdempotentFamily,
    jobs: usize,
) -> Result<SweepSummary> {
    let reports = check_pairs(theorem, family_p, family_q, jobs, crate::ring::DEFAULT_CAP)?;
    Ok(SweepSummary::from_reports(theorem, &reports))
}
