//! Executable equivalence checks on pairs of idempotents `p`, `q`.
//!
//! Every check materialises the condition elements from `p` and `q`, decides
//! each one with the engine and records the unconditional ring identities
//! that the arguments rely on. A sweep can only sample pairs, so these
//! checks demonstrate the equivalences on concrete rings; they do not prove
//! them.

mod sweep;

use crate::drazin::verify_axioms;
use crate::error::{Error, Result};
use crate::report::{Condition, EquivalenceReport, IdentityCheck, Theorem};
use crate::ring::Element;

pub use sweep::{check_pairs, sweep, sorted_family, SweepSummary};

fn idempotent_pair(p: &Element, q: &Element) -> Result<()> {
    p.same_ring(q)?;
    for (name, e) in [("p", p), ("q", q)] {
        if !e.is_idempotent() {
            return Err(Error::Precondition(format!("{name} = {e} is not idempotent")));
        }
    }
    Ok(())
}

/// The ring identities that hold for every pair of idempotents.
pub fn structural_identities(p: &Element, q: &Element) -> Vec<IdentityCheck> {
    let one = Element::one(p.ring());
    let pq = p * q;
    let qp = q * p;
    let pqp = &pq * p;
    let diff_sq = (p - q).pow(2);
    let sum = p + q;
    let sum_minus_one = &sum - &one;
    let anti = &pq + &qp;

    let lhs = &one - &pqp;
    let rhs = &(&diff_sq * p) + &p.complement();
    let left_mul = p * &diff_sq;
    let prod = &sum * &sum_minus_one;
    vec![
        IdentityCheck { name: "1-pqp = (p-q)^2 p + 1-p".into(), holds: lhs == rhs },
        IdentityCheck {
            name: "p(p-q)^2 = (p-q)^2 p = p-pqp".into(),
            holds: left_mul == &diff_sq * p && left_mul == p - &pqp,
        },
        IdentityCheck {
            name: "pq+qp = (p+q)(p+q-1) = (p+q-1)(p+q)".into(),
            holds: anti == prod && prod == &sum_minus_one * &sum,
        },
    ]
}

fn build(theorem: Theorem, p: &Element, q: &Element, conditions: Vec<(&str, Element)>) -> Result<EquivalenceReport> {
    idempotent_pair(p, q)?;
    let conditions = conditions.into_iter().map(|(name, e)| Condition::decide(name, e)).collect();
    let mut report = EquivalenceReport::new(theorem, (p.clone(), q.clone()), conditions);
    report.identities = structural_identities(p, q);
    // Every witness carried by the report must itself satisfy the axioms.
    for c in &report.conditions {
        if let Some(w) = &c.decision.witness {
            verify_axioms(&c.element, w)?;
        }
    }
    Ok(report)
}

/// `1-pq`, `p-pq`, `p-qp`, `1-pqp`, `p-pqp`, `1-qp`, `q-qp`, `q-pq`, `1-qpq`, `q-qpq`.
pub fn prop31(p: &Element, q: &Element) -> Result<EquivalenceReport> {
    p.same_ring(q)?;
    let one = Element::one(p.ring());
    let pq = p * q;
    let qp = q * p;
    let pqp = &pq * p;
    let qpq = &qp * q;
    build(
        Theorem::Prop31,
        p,
        q,
        vec![
            ("1-pq", &one - &pq),
            ("p-pq", p - &pq),
            ("p-qp", p - &qp),
            ("1-pqp", &one - &pqp),
            ("p-pqp", p - &pqp),
            ("1-qp", &one - &qp),
            ("q-qp", q - &qp),
            ("q-pq", q - &pq),
            ("1-qpq", &one - &qpq),
            ("q-qpq", q - &qpq),
        ],
    )
}

/// The ten conditions obtained from [`prop31`] by `p -> 1-p`, `q -> 1-q`.
pub fn cor32(p: &Element, q: &Element) -> Result<EquivalenceReport> {
    p.same_ring(q)?;
    let pq = p * q;
    let qp = q * p;
    let (np, nq) = (p.complement(), q.complement());
    build(
        Theorem::Cor32,
        p,
        q,
        vec![
            ("p+q-pq", &(p + q) - &pq),
            ("q-pq", q - &pq),
            ("q-qp", q - &qp),
            ("p+(1-p)(q-qp)", p + &(&np * &(q - &qp))),
            ("(1-p)q(1-p)", &(&np * q) * &np),
            ("p+q-qp", &(p + q) - &qp),
            ("p-qp", p - &qp),
            ("p-pq", p - &pq),
            ("q+(1-q)(p-pq)", q + &(&nq * &(p - &pq))),
            ("(1-q)p(1-q)", &(&nq * p) * &nq),
        ],
    )
}

/// `p-q`, `1-pq`, `p+q-pq`.
pub fn thm33(p: &Element, q: &Element) -> Result<EquivalenceReport> {
    p.same_ring(q)?;
    let one = Element::one(p.ring());
    let pq = p * q;
    build(Theorem::Thm33, p, q, vec![("p-q", p - q), ("1-pq", &one - &pq), ("p+q-pq", &(p + q) - &pq)])
}

/// `pq`, `1-p-q`, `(1-p)(1-q)`.
pub fn thm34(p: &Element, q: &Element) -> Result<EquivalenceReport> {
    p.same_ring(q)?;
    let one = Element::one(p.ring());
    build(
        Theorem::Thm34,
        p,
        q,
        vec![("pq", p * q), ("1-p-q", &(&one - p) - q), ("(1-p)(1-q)", &p.complement() * &q.complement())],
    )
}

/// Commutator `pq-qp` is a member iff `pq` and `p-q` both are.
pub fn thm35(p: &Element, q: &Element) -> Result<EquivalenceReport> {
    p.same_ring(q)?;
    let pq = p * q;
    build(Theorem::Thm35, p, q, vec![("pq-qp", &pq - &(q * p)), ("pq", pq), ("p-q", p - q)])
}

/// Anti-commutator `pq+qp` is a member iff `pq` and `p+q` both are.
pub fn thm36(p: &Element, q: &Element) -> Result<EquivalenceReport> {
    p.same_ring(q)?;
    let pq = p * q;
    build(Theorem::Thm36, p, q, vec![("pq+qp", &pq + &(q * p)), ("pq", pq), ("p+q", p + q)])
}

/// Verdicts for `p-q` and `p+q`; in a general ring these can differ.
pub fn remark37(p: &Element, q: &Element) -> Result<EquivalenceReport> {
    p.same_ring(q)?;
    build(Theorem::Remark37, p, q, vec![("p-q", p - q), ("p+q", p + q)])
}

/// `p = q = 1` in `Z`: `p - q = 0` is Drazin invertible but `p + q = 2` is not.
pub fn remark37_regression() -> EquivalenceReport {
    let one = Element::one(&crate::ring::Ring::integers());
    remark37(&one, &one).expect("1 is idempotent")
}

/// Runs `theorem` on the pair. For `lemma26` the pair is read as `(p, q)`
/// and the corners of `a = q` along `p` are checked.
pub fn check(theorem: Theorem, p: &Element, q: &Element) -> Result<EquivalenceReport> {
    match theorem {
        Theorem::Prop31 => prop31(p, q),
        Theorem::Cor32 => cor32(p, q),
        Theorem::Thm33 => thm33(p, q),
        Theorem::Thm34 => thm34(p, q),
        Theorem::Thm35 => thm35(p, q),
        Theorem::Thm36 => thm36(p, q),
        Theorem::Remark37 => remark37(p, q),
        Theorem::Lemma26 => {
            idempotent_pair(p, q)?;
            let mut report = crate::drazin::corner_equivalence(q, p)?;
            report.identities = structural_identities(p, q);
            Ok(report)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drazin::Verdict::{self, Member, NonMember};
    use crate::ring::{IdempotentFamily, Ring, DEFAULT_CAP};

    fn m2z(rows: [[i64; 2]; 2]) -> Element {
        Element::from_int_rows(&Ring::matrix(2, Ring::integers()).unwrap(), &rows).unwrap()
    }

    fn test_pair() -> (Element, Element) {
        (m2z([[1, 0], [0, 0]]), m2z([[2, 1], [-2, -1]]))
    }

    fn int_one() -> Element {
        Element::one(&Ring::integers())
    }

    #[test]
    fn integers_with_p_equal_q_one() {
        let one = int_one();
        let r = prop31(&one, &one).unwrap();
        assert!(r.conditions.iter().all(|c| c.element.is_zero() && c.verdict() == Member));
        assert!(r.agree);
        let r = thm33(&one, &one).unwrap();
        assert_eq!(r.verdicts(), vec![Member; 3]);
        let r = thm34(&one, &one).unwrap();
        assert_eq!(r.conditions[1].element, Element::from_int(&Ring::integers(), -1));
        assert_eq!(r.verdicts(), vec![Member; 3]);
        let r = thm36(&one, &one).unwrap();
        assert_eq!(r.verdicts(), vec![NonMember, Member, NonMember]);
        assert!(r.consistent && !r.is_violation());
    }

    #[test]
    fn integer_matrix_pair() {
        let (p, q) = test_pair();
        let r = prop31(&p, &q).unwrap();
        assert_eq!(r.conditions[0].element, m2z([[-1, -1], [0, 1]]));
        assert_eq!(r.verdicts(), vec![Member; 10]);
        assert_eq!(cor32(&p, &q).unwrap().verdicts(), vec![Member; 10]);
        let r = thm33(&p, &q).unwrap();
        assert_eq!(r.conditions[0].element, m2z([[-1, -1], [2, 1]]));
        assert_eq!(r.verdicts(), vec![Member; 3]);

        let r = thm34(&p, &q).unwrap();
        assert_eq!(r.conditions[0].element, m2z([[2, 1], [0, 0]]));
        assert_eq!(r.conditions[1].element, m2z([[-2, -1], [2, 2]]));
        assert_eq!(r.verdicts(), vec![NonMember; 3]);
        assert!(r.all_non_member());

        let r = thm35(&p, &q).unwrap();
        assert_eq!(r.conditions[0].element, m2z([[0, 1], [2, 0]]));
        assert_eq!(r.verdicts(), vec![NonMember, NonMember, Member]);
        assert!(r.consistent);

        let r = thm36(&p, &q).unwrap();
        assert_eq!(r.conditions[0].element, m2z([[4, 1], [-2, 0]]));
        assert_eq!(r.conditions[2].element, m2z([[3, 1], [-2, -1]]));
        assert_eq!(r.verdicts(), vec![NonMember, NonMember, Member]);
        assert!(r.consistent);
    }

    #[test]
    fn corollary_is_the_complemented_proposition() {
        let rings = [
            Ring::matrix(2, Ring::prime_field(2).unwrap()).unwrap(),
            Ring::modular(12).unwrap(),
        ];
        for ring in rings {
            let ids = IdempotentFamily::exhaustive(&ring).idempotents(DEFAULT_CAP).unwrap();
            for p in &ids {
                for q in &ids {
                    let cor = cor32(p, q).unwrap();
                    let prop = prop31(&p.complement(), &q.complement()).unwrap();
                    let a: Vec<&Element> = cor.conditions.iter().map(|c| &c.element).collect();
                    let b: Vec<&Element> = prop.conditions.iter().map(|c| &c.element).collect();
                    assert_eq!(a, b);
                }
            }
        }
        let (p, q) = test_pair();
        let cor = cor32(&p, &q).unwrap();
        let prop = prop31(&p.complement(), &q.complement()).unwrap();
        for (c, d) in cor.conditions.iter().zip(&prop.conditions) {
            assert_eq!(c.element, d.element, "{} vs {}", c.name, d.name);
        }
    }

    #[test]
    fn p_equal_q() {
        let (p, _) = test_pair();
        let r = cor32(&p, &p).unwrap();
        assert_eq!(r.conditions[0].element, p);
        assert!(r.agree);
        let r = thm35(&p, &p).unwrap();
        assert!(r.conditions[0].element.is_zero());
        assert_eq!(r.verdicts(), vec![Member; 3]);
    }

    #[test]
    fn remark_regressions() {
        let r = remark37_regression();
        assert_eq!(r.verdict_of("p-q"), Some(Member));
        assert_eq!(r.verdict_of("p+q"), Some(NonMember));
        let zero = Element::zero(&Ring::integers());
        assert_eq!(remark37(&zero, &zero).unwrap().verdicts(), vec![Member, Member]);
        let one5 = Element::one(&Ring::modular(5).unwrap());
        assert_eq!(remark37(&one5, &one5).unwrap().verdicts(), vec![Member, Member]);
    }

    #[test]
    fn finite_rings_are_all_members() {
        let ring = Ring::matrix(2, Ring::prime_field(2).unwrap()).unwrap();
        let ids = IdempotentFamily::exhaustive(&ring).idempotents(DEFAULT_CAP).unwrap();
        for p in &ids {
            for q in &ids {
                for t in Theorem::ALL {
                    let r = check(t, p, q).unwrap();
                    assert!(r.verdicts().iter().all(|v| *v == Verdict::Member), "{t} {p} {q}");
                    assert!(!r.is_violation());
                }
            }
        }
    }

    #[test]
    fn rejects_non_idempotents() {
        let two = Element::from_int(&Ring::modular(12).unwrap(), 2);
        let one = Element::one(two.ring());
        assert!(matches!(thm33(&two, &one), Err(Error::Precondition(_))));
        assert!(matches!(check(Theorem::Lemma26, &one, &two), Err(Error::Precondition(_))));
        assert!(matches!(prop31(&one, &int_one()), Err(Error::RingMismatch { .. })));
    }
}
