//! Equivalence reports: one per checked pair, listing every condition with
//! its membership decision so the verdicts can be audited afterwards.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use serde_json::Value as Json;

use crate::drazin::{drazin_membership, DrazinResult, MembershipDecision, Method, Verdict};
use crate::error::Error;
use crate::ring::{value_to_json, Element};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Prop31,
    Cor32,
    Thm33,
    Thm34,
    Thm35,
    Thm36,
    Lemma26,
    Remark37,
}

impl Theorem {
    pub const ALL: [Theorem; 8] = [
        Theorem::Prop31,
        Theorem::Cor32,
        Theorem::Thm33,
        Theorem::Thm34,
        Theorem::Thm35,
        Theorem::Thm36,
        Theorem::Lemma26,
        Theorem::Remark37,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Theorem::Prop31 => "prop31",
            Theorem::Cor32 => "cor32",
            Theorem::Thm33 => "thm33",
            Theorem::Thm34 => "thm34",
            Theorem::Thm35 => "thm35",
            Theorem::Thm36 => "thm36",
            Theorem::Lemma26 => "lemma26",
            Theorem::Remark37 => "remark37",
        }
    }

    pub fn contract(self) -> Contract {
        match self {
            Theorem::Thm35 | Theorem::Thm36 => Contract::FirstIffRest,
            Theorem::Remark37 => Contract::Observation,
            _ => Contract::AllEqual,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.label() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown theorem label {s:?}")))
    }
}

/// How the verdicts of a report must relate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Contract {
    /// Every condition has the same verdict.
    AllEqual,
    /// The first condition is a member iff all the others are.
    FirstIffRest,
    /// Nothing is claimed; the report only records verdicts.
    Observation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    #[serde(serialize_with = "value_only")]
    pub element: Element,
    #[serde(serialize_with = "decision_compact")]
    pub decision: MembershipDecision,
}

impl Condition {
    pub fn decide(name: &str, element: Element) -> Condition {
        let decision = drazin_membership(&element);
        Condition { name: name.to_string(), element, decision }
    }

    pub fn verdict(&self) -> Verdict {
        self.decision.verdict
    }
}

/// An unconditional ring identity evaluated on the report's pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
}

/// An inverse built by a closed-form construction and checked independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub name: String,
    #[serde(serialize_with = "value_only")]
    pub inverse: Element,
    /// The construction satisfies the Drazin axioms for its target.
    pub valid: bool,
    /// Equality with the engine's own inverse, when the engine produced one.
    pub matches_engine: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub theorem: Theorem,
    #[serde(serialize_with = "pair_values")]
    pub pair: (Element, Element),
    pub conditions: Vec<Condition>,
    /// All decisive verdicts are identical.
    pub agree: bool,
    /// No condition is undecidable.
    pub decisive: bool,
    /// The theorem's verdict contract holds (vacuously when not decisive).
    pub consistent: bool,
    pub identities: Vec<IdentityCheck>,
    pub constructions: Vec<Construction>,
}

impl EquivalenceReport {
    pub fn new(theorem: Theorem, pair: (Element, Element), conditions: Vec<Condition>) -> Self {
        let decisive_verdicts: Vec<Verdict> =
            conditions.iter().map(Condition::verdict).filter(|v| v.is_decisive()).collect();
        let agree = decisive_verdicts.windows(2).all(|w| w[0] == w[1]);
        let decisive = decisive_verdicts.len() == conditions.len();
        let consistent = !decisive
            || match theorem.contract() {
                Contract::AllEqual => agree,
                Contract::FirstIffRest => {
                    let (first, rest) = conditions.split_first().expect("at least one condition");
                    first.decision.is_member() == rest.iter().all(|c| c.decision.is_member())
                }
                Contract::Observation => true,
            };
        EquivalenceReport {
            theorem,
            pair,
            conditions,
            agree,
            decisive,
            consistent,
            identities: Vec::new(),
            constructions: Vec::new(),
        }
    }

    pub fn verdicts(&self) -> Vec<Verdict> {
        self.conditions.iter().map(Condition::verdict).collect()
    }

    pub fn verdict_of(&self, name: &str) -> Option<Verdict> {
        self.conditions.iter().find(|c| c.name == name).map(Condition::verdict)
    }

    pub fn all_non_member(&self) -> bool {
        self.conditions.iter().all(|c| c.verdict() == Verdict::NonMember)
    }

    /// A defect: a broken contract, a failed identity or a bad construction.
    pub fn is_violation(&self) -> bool {
        !self.consistent
            || self.identities.iter().any(|i| !i.holds)
            || self.constructions.iter().any(|c| !c.valid || c.matches_engine == Some(false))
    }
}

/// Serialises an element as its bare payload.
pub(crate) fn value_only<S: Serializer>(e: &Element, s: S) -> Result<S::Ok, S::Error> {
    value_to_json(e.ring(), e.value()).serialize(s)
}

fn pair_values<S: Serializer>(pair: &(Element, Element), s: S) -> Result<S::Ok, S::Error> {
    let (a, b) = pair;
    Json::Array(vec![value_to_json(a.ring(), a.value()), value_to_json(b.ring(), b.value())]).serialize(s)
}

#[derive(Serialize)]
struct CompactDecision {
    verdict: Verdict,
    method: Method,
    inverse: Option<Json>,
    index: Option<u64>,
}

fn decision_compact<S: Serializer>(d: &MembershipDecision, s: S) -> Result<S::Ok, S::Error> {
    let (inverse, index) = match &d.witness {
        Some(DrazinResult { inverse, index }) => (Some(value_to_json(inverse.ring(), inverse.value())), Some(*index)),
        None => (None, None),
    };
    CompactDecision { verdict: d.verdict, method: d.method, inverse, index }.serialize(s)
}
