//! Drazin inverses: results, axiom checks and membership decisions.
//!
//! `b` is the Drazin inverse of `a` when `ab = ba`, `bab = b` and
//! `a^k = a^(k+1) b` for some `k >= 0`. The index reported everywhere is the
//! least such `k`, with `a^0 = 1`, so units have index 0.

mod finite;
mod lemmas;
mod matrix;

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{Element, Ring, RingKind, Value};

pub use finite::drazin_finite;
pub use lemmas::{
    cline, commute_with_drazin, corner_equivalence, corner_split, drazin_product_commuting,
    drazin_sum_orthogonal, jacobson_transfer, pierce_combine, quadratic_lift, QuadraticLift,
};
pub use matrix::{drazin_matrix_field, matrix_rank};

/// A Drazin inverse together with the Drazin index of the original element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DrazinResult {
    pub inverse: Element,
    pub index: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Member,
    NonMember,
    Undecidable,
}

impl Verdict {
    pub fn is_decisive(self) -> bool {
        self != Verdict::Undecidable
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Member => "member",
            Verdict::NonMember => "non-member",
            Verdict::Undecidable => "undecidable",
        })
    }
}

/// Strategy used to reach a membership verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    FinitePowerCycle,
    MatrixFieldRank,
    FieldScalar,
    IntegerUnits,
    IntegerMatrixIntegrality,
    ProductComponentwise,
    NoStrategy,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::FinitePowerCycle => "finite-power-cycle",
            Method::MatrixFieldRank => "matrix-field-rank",
            Method::FieldScalar => "field-scalar",
            Method::IntegerUnits => "integer-units",
            Method::IntegerMatrixIntegrality => "integer-matrix-integrality",
            Method::ProductComponentwise => "product-componentwise",
            Method::NoStrategy => "no-strategy",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipDecision {
    pub verdict: Verdict,
    pub witness: Option<DrazinResult>,
    pub method: Method,
}

impl MembershipDecision {
    pub fn member(witness: DrazinResult, method: Method) -> Self {
        MembershipDecision { verdict: Verdict::Member, witness: Some(witness), method }
    }

    pub fn non_member(method: Method) -> Self {
        MembershipDecision { verdict: Verdict::NonMember, witness: None, method }
    }

    pub fn undecidable() -> Self {
        MembershipDecision { verdict: Verdict::Undecidable, witness: None, method: Method::NoStrategy }
    }

    pub fn is_member(&self) -> bool {
        self.verdict == Verdict::Member
    }
}

/// Upper bound on the Drazin index of any element of `ring`.
///
/// `Z_n`: the largest prime-power exponent of `n`, at most `log2 n`.
/// `M_d(S)`: `d` times the bound for `S`. Fields and `Z`: 1.
pub fn index_bound(ring: &Ring) -> u64 {
    match ring.kind() {
        RingKind::Modular { n } => u64::from(64 - n.leading_zeros()),
        RingKind::PrimeField { .. } | RingKind::Integers | RingKind::Rationals => 1,
        RingKind::Matrix { dim, base } => *dim as u64 * index_bound(base),
        RingKind::Product { left, right } => index_bound(left).max(index_bound(right)),
    }
}

/// Least `k` in `0..=cap` with `a^k = a^(k+1) b`.
pub fn least_index(a: &Element, b: &Element, cap: u64) -> Option<u64> {
    let ab = a * b;
    let mut power = Element::one(a.ring());
    for k in 0..=cap {
        if power == &power * &ab {
            return Some(k);
        }
        power = &power * a;
    }
    None
}

/// Checks the three Drazin equations and minimality of the reported index.
pub fn verify_axioms(a: &Element, result: &DrazinResult) -> Result<()> {
    let b = &result.inverse;
    a.same_ring(b)?;
    let ab = a * b;
    if ab != b * a {
        return Err(Error::AxiomViolation(format!("a·b != b·a for a = {a}, b = {b}")));
    }
    if &(b * &ab) != b {
        return Err(Error::AxiomViolation(format!("b·a·b != b for a = {a}, b = {b}")));
    }
    let k = result.index;
    let ak = a.pow(k);
    if ak != &ak * &ab {
        return Err(Error::AxiomViolation(format!("a^{k} != a^{} b for a = {a}, b = {b}", k + 1)));
    }
    if k > 0 {
        let prev = a.pow(k - 1);
        if prev == &prev * &ab {
            return Err(Error::AxiomViolation(format!("index {k} is not minimal for a = {a}")));
        }
    }
    Ok(())
}

/// Wraps a candidate inverse for `target`: finds its least index and checks the axioms.
pub(crate) fn finish(target: &Element, inverse: Element) -> Result<DrazinResult> {
    let index = least_index(target, &inverse, index_bound(target.ring())).ok_or_else(|| {
        Error::AxiomViolation(format!("no k satisfies a^k = a^(k+1) b for a = {target}, b = {inverse}"))
    })?;
    let result = DrazinResult { inverse, index };
    verify_axioms(target, &result)?;
    Ok(result)
}

fn field_scalar(a: &Element) -> DrazinResult {
    match a.ring().field_inverse(a.value()) {
        Some(inv) => DrazinResult { inverse: Element::from_canonical(a.ring(), inv), index: 0 },
        None => DrazinResult { inverse: Element::zero(a.ring()), index: 1 },
    }
}

/// Decides whether `a` is Drazin invertible, attaching the inverse when it is.
pub fn drazin_membership(a: &Element) -> MembershipDecision {
    let ring = a.ring();
    if ring.is_finite() {
        if let Ok(result) = drazin_finite(a) {
            return MembershipDecision::member(result, Method::FinitePowerCycle);
        }
        // Power cycle too long to scan; fields and matrices over prime fields
        // still have a direct route.
    }
    match ring.kind() {
        RingKind::PrimeField { .. } | RingKind::Rationals => {
            MembershipDecision::member(field_scalar(a), Method::FieldScalar)
        }
        RingKind::Integers => match a.value() {
            Value::Int(k) if k.is_zero() => MembershipDecision::member(
                DrazinResult { inverse: a.clone(), index: 1 },
                Method::IntegerUnits,
            ),
            Value::Int(k) if k.abs().is_one() => MembershipDecision::member(
                DrazinResult { inverse: a.clone(), index: 0 },
                Method::IntegerUnits,
            ),
            _ => MembershipDecision::non_member(Method::IntegerUnits),
        },
        RingKind::Matrix { base, .. } if base.is_field() => match drazin_matrix_field(a) {
            Ok(result) => MembershipDecision::member(result, Method::MatrixFieldRank),
            Err(_) => MembershipDecision::undecidable(),
        },
        RingKind::Matrix { base, .. } if matches!(base.kind(), RingKind::Integers) => {
            matrix::integer_matrix_membership(a)
        }
        RingKind::Product { .. } => {
            let (left, right) = a.components().expect("product element");
            let (dl, dr) = (drazin_membership(&left), drazin_membership(&right));
            match (dl.verdict, dr.verdict) {
                (Verdict::Member, Verdict::Member) => {
                    let (wl, wr) = (dl.witness.unwrap(), dr.witness.unwrap());
                    let inverse = Element::pair(ring, wl.inverse, wr.inverse).expect("components match");
                    MembershipDecision::member(
                        DrazinResult { inverse, index: wl.index.max(wr.index) },
                        Method::ProductComponentwise,
                    )
                }
                (Verdict::NonMember, _) | (_, Verdict::NonMember) => {
                    MembershipDecision::non_member(Method::ProductComponentwise)
                }
                _ => MembershipDecision::undecidable(),
            }
        }
        _ => MembershipDecision::undecidable(),
    }
}

/// Drazin inverse of `a`, or an error when `a` is not (or not provably) invertible.
pub fn drazin(a: &Element) -> Result<DrazinResult> {
    let decision = drazin_membership(a);
    match decision.verdict {
        Verdict::Member => Ok(decision.witness.expect("member carries a witness")),
        Verdict::NonMember => Err(Error::NotInvertible { method: decision.method.label() }),
        Verdict::Undecidable => Err(Error::Undecidable),
    }
}

/// Like [`drazin`], but reports failure as a violated precondition on `name`.
pub(crate) fn require_drazin(a: &Element, name: &str) -> Result<DrazinResult> {
    drazin(a).map_err(|e| Error::Precondition(format!("{name} must be Drazin invertible: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Ring {
        Ring::modular(n).unwrap()
    }

    #[test]
    fn integers_membership() {
        let zz = Ring::integers();
        let two = drazin_membership(&Element::from_int(&zz, 2));
        assert_eq!(two.verdict, Verdict::NonMember);
        assert!(two.witness.is_none());
        let zero = drazin_membership(&Element::zero(&zz));
        assert_eq!(zero.witness.unwrap(), DrazinResult { inverse: Element::zero(&zz), index: 1 });
        let m1 = Element::from_int(&zz, -1);
        assert_eq!(drazin(&m1).unwrap(), DrazinResult { inverse: m1.clone(), index: 0 });
        assert!(matches!(drazin(&Element::from_int(&zz, -2)), Err(Error::NotInvertible { .. })));
    }

    #[test]
    fn rational_scalars() {
        let q = Ring::rationals();
        let r = drazin(&Element::rational(&q, -3, 4).unwrap()).unwrap();
        assert_eq!(r.inverse, Element::rational(&q, -4, 3).unwrap());
        assert_eq!(r.index, 0);
        assert_eq!(drazin(&Element::zero(&q)).unwrap().index, 1);
    }

    #[test]
    fn large_prime_field_uses_direct_route() {
        let f = Ring::prime_field(1_000_000_007).unwrap();
        let d = drazin_membership(&Element::from_int(&f, 5));
        assert_eq!(d.method, Method::FieldScalar);
        let w = d.witness.unwrap();
        assert!((&w.inverse * &Element::from_int(&f, 5)).is_one());
    }

    #[test]
    fn products_split_componentwise() {
        let prod = Ring::product(z(12), Ring::integers());
        let a = Element::pair(&prod, Element::from_int(&z(12), 2), Element::from_int(&Ring::integers(), -1)).unwrap();
        let d = drazin_membership(&a);
        assert_eq!(d.method, Method::ProductComponentwise);
        let w = d.witness.unwrap();
        assert_eq!(w.index, 2);
        verify_axioms(&a, &w).unwrap();
        let b = Element::pair(&prod, Element::from_int(&z(12), 2), Element::from_int(&Ring::integers(), 3)).unwrap();
        assert_eq!(drazin_membership(&b).verdict, Verdict::NonMember);
    }

    #[test]
    fn undecidable_rings() {
        let zz = Ring::integers();
        let mm = Ring::matrix(2, Ring::matrix(2, zz.clone()).unwrap()).unwrap();
        let d = drazin_membership(&Element::one(&mm));
        assert_eq!(d.verdict, Verdict::Undecidable);
        assert!(matches!(drazin(&Element::one(&mm)), Err(Error::Undecidable)));
    }

    #[test]
    fn axiom_checker_rejects_bad_candidates() {
        let r = z(12);
        let two = Element::from_int(&r, 2);
        let good = DrazinResult { inverse: Element::from_int(&r, 8), index: 2 };
        verify_axioms(&two, &good).unwrap();
        let wrong_inverse = DrazinResult { inverse: Element::from_int(&r, 4), index: 2 };
        assert!(verify_axioms(&two, &wrong_inverse).is_err());
        let not_minimal = DrazinResult { inverse: Element::from_int(&r, 8), index: 3 };
        assert!(verify_axioms(&two, &not_minimal).is_err());
        let too_small = DrazinResult { inverse: Element::from_int(&r, 8), index: 1 };
        assert!(verify_axioms(&two, &too_small).is_err());
    }

    #[test]
    fn index_bounds() {
        assert_eq!(index_bound(&z(12)), 4);
        assert_eq!(index_bound(&Ring::matrix(3, Ring::rationals()).unwrap()), 3);
        assert_eq!(index_bound(&Ring::matrix(2, z(8)).unwrap()), 8);
    }
}
