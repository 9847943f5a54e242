//! Exact Drazin inverses of square matrices over a field, and the integer
//! matrix decision built on top of them.

use num_rational::BigRational;
use num_traits::One;

use super::{finish, DrazinResult, MembershipDecision, Method};
use crate::error::{Error, Result};
use crate::ring::{Element, Ring, RingKind, Value};

struct Echelon {
    rank: usize,
    pivots: Vec<usize>,
    /// Invertible `P` with `P·M` in reduced row-echelon form.
    transform: Vec<Value>,
}

fn row_reduce(base: &Ring, dim: usize, m: &[Value]) -> Echelon {
    let zero = base.zero_value();
    let mut rows: Vec<Vec<Value>> = m.chunks(dim).map(<[Value]>::to_vec).collect();
    let mut transform: Vec<Vec<Value>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { base.one_value() } else { zero.clone() }).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..dim {
        if r == dim {
            break;
        }
        let Some(pr) = (r..dim).find(|&i| rows[i][col] != zero) else {
            continue;
        };
        rows.swap(r, pr);
        transform.swap(r, pr);
        let inv = base.field_inverse(&rows[r][col]).expect("nonzero pivot in a field");
        for j in 0..dim {
            rows[r][j] = base.mul_values(&inv, &rows[r][j]);
            transform[r][j] = base.mul_values(&inv, &transform[r][j]);
        }
        for i in 0..dim {
            if i == r || rows[i][col] == zero {
                continue;
            }
            let factor = base.neg_value(&rows[i][col]);
            for j in 0..dim {
                let t = base.mul_values(&factor, &rows[r][j]);
                rows[i][j] = base.add_values(&rows[i][j], &t);
                let t = base.mul_values(&factor, &transform[r][j]);
                transform[i][j] = base.add_values(&transform[i][j], &t);
            }
        }
        pivots.push(col);
        r += 1;
    }
    Echelon { rank: r, pivots, transform: transform.into_iter().flatten().collect() }
}

fn field_matrix_parts(a: &Element) -> Result<(usize, &Ring)> {
    match a.ring().kind() {
        RingKind::Matrix { dim, base } if base.is_field() => Ok((*dim, base)),
        _ => Err(Error::Unsupported(format!("{} is not a matrix ring over a field", a.ring()))),
    }
}

/// Rank of a matrix over a field, by exact Gaussian elimination.
pub fn matrix_rank(a: &Element) -> Result<usize> {
    let (dim, base) = field_matrix_parts(a)?;
    let Value::Matrix(entries) = a.value() else { unreachable!() };
    Ok(row_reduce(base, dim, entries).rank)
}

/// A `{1}`-inverse `G` of `m` (so `m·G·m = m`).
///
/// With `P·m = R` in reduced echelon form and pivot columns `c_i`, the matrix
/// `Q` with `Q[c_i][i] = 1` gives `G = Q·P`.
fn one_inverse(m: &Element) -> Result<Element> {
    let (dim, base) = field_matrix_parts(m)?;
    let Value::Matrix(entries) = m.value() else { unreachable!() };
    let ech = row_reduce(base, dim, entries);
    let mut selector = vec![base.zero_value(); dim * dim];
    for (i, &c) in ech.pivots.iter().enumerate() {
        selector[c * dim + i] = base.one_value();
    }
    let q = Element::new(m.ring(), Value::Matrix(selector))?;
    let p = Element::new(m.ring(), Value::Matrix(ech.transform))?;
    Ok(&q * &p)
}

/// Drazin inverse of a square matrix over a prime field or the rationals.
///
/// The index `l` is where the rank of `a^k` stops dropping; the inverse is
/// `a^l · G · a^l` for any `{1}`-inverse `G` of `a^(2l+1)`.
pub fn drazin_matrix_field(a: &Element) -> Result<DrazinResult> {
    let (dim, _) = field_matrix_parts(a)?;
    let mut power = Element::one(a.ring());
    let mut rank = matrix_rank(&power)?;
    let mut stable_at = None;
    for k in 0..=dim {
        let next = &power * a;
        let next_rank = matrix_rank(&next)?;
        if next_rank == rank {
            stable_at = Some(k as u64);
            break;
        }
        power = next;
        rank = next_rank;
    }
    let level = stable_at.ok_or_else(|| Error::Defect(format!("rank of powers of {a} never stabilised")))?;
    let a_level = a.pow(level);
    let g = one_inverse(&a.pow(2 * level + 1))?;
    let inverse = &(&a_level * &g) * &a_level;
    let result = finish(a, inverse)?;
    if result.index != level {
        return Err(Error::Defect(format!(
            "rank stabilises at {level} but the axiom index is {}",
            result.index
        )));
    }
    Ok(result)
}

pub(crate) fn to_rational_matrix(a: &Element) -> Element {
    let RingKind::Matrix { dim, .. } = a.ring().kind() else { unreachable!() };
    let Value::Matrix(entries) = a.value() else { unreachable!() };
    let q = Ring::matrix(*dim, Ring::rationals()).expect("valid dimension");
    let entries = entries
        .iter()
        .map(|e| match e {
            Value::Int(k) => Value::Rat(BigRational::from_integer(k.clone())),
            _ => unreachable!("integer matrix entry"),
        })
        .collect();
    Element::from_canonical(&q, Value::Matrix(entries))
}

/// Converts a rational matrix back into `ring` (a matrix ring over `Z`) if every entry is integral.
pub(crate) fn to_integer_matrix(ring: &Ring, a: &Element) -> Option<Element> {
    let Value::Matrix(entries) = a.value() else { unreachable!() };
    let entries: Option<Vec<Value>> = entries
        .iter()
        .map(|e| match e {
            Value::Rat(r) if r.denom().is_one() => Some(Value::Int(r.numer().clone())),
            _ => None,
        })
        .collect();
    Some(Element::from_canonical(ring, Value::Matrix(entries?)))
}

/// `a` in `M_d(Z)` is Drazin invertible iff its Drazin inverse over `Q` is integral;
/// uniqueness of the inverse leaves no other candidate.
pub(crate) fn integer_matrix_membership(a: &Element) -> MembershipDecision {
    let over_q = to_rational_matrix(a);
    let Ok(rational) = drazin_matrix_field(&over_q) else {
        return MembershipDecision::undecidable();
    };
    match to_integer_matrix(a.ring(), &rational.inverse) {
        Some(inverse) => match finish(a, inverse) {
            Ok(result) => MembershipDecision::member(result, Method::IntegerMatrixIntegrality),
            Err(_) => MembershipDecision::undecidable(),
        },
        None => MembershipDecision::non_member(Method::IntegerMatrixIntegrality),
    }
}
