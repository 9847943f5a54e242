use std::collections::HashMap;

use num_traits::ToPrimitive;

use super::{finish, DrazinResult};
use crate::error::{Error, Result};
use crate::ring::{Element, Value};

/// Longest power sequence scanned before giving up.
const MAX_POWER_STEPS: u64 = 1 << 20;

/// Drazin inverse in a finite ring, read off the eventual cycle of `a, a^2, a^3, ...`.
///
/// If `a^j` is the first repeat of an earlier `a^i`, every power from `a^i`
/// on is periodic with period `j - i`, and `a^s` is the inverse for any
/// `s >= i` with `s + 1` divisible by the period.
pub fn drazin_finite(a: &Element) -> Result<DrazinResult> {
    let ring = a.ring();
    let card = ring
        .cardinality()
        .ok_or_else(|| Error::Unsupported(format!("{ring} is infinite")))?;
    let limit = card.to_u64().map_or(MAX_POWER_STEPS, |c| c.saturating_add(1).min(MAX_POWER_STEPS));

    let mut first_seen: HashMap<Value, u64> = HashMap::new();
    let mut power = a.value().clone();
    let mut exponent = 1u64;
    let (tail, period) = loop {
        if let Some(&earlier) = first_seen.get(&power) {
            break (earlier, exponent - earlier);
        }
        if exponent > limit {
            return Err(Error::ResourceLimit {
                what: "power sequence length",
                size: format!("> {limit}"),
                cap: MAX_POWER_STEPS,
            });
        }
        let next = ring.mul_values(&power, a.value());
        first_seen.insert(power, exponent);
        power = next;
        exponent += 1;
    };

    let s = tail + (period - (tail + 1) % period) % period;
    let inverse = a.pow(s);
    let result = finish(a, inverse)?;
    if result.index > tail {
        return Err(Error::Defect(format!("index {} exceeds cycle tail {tail}", result.index)));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn two_mod_twelve() {
        let r = Ring::modular(12).unwrap();
        let res = drazin_finite(&Element::from_int(&r, 2)).unwrap();
        assert_eq!(res.inverse, Element::from_int(&r, 8));
        assert_eq!(res.index, 2);
    }

    #[test]
    fn units_have_index_zero() {
        let r = Ring::modular(12).unwrap();
        for u in [1, 5, 7, 11] {
            let a = Element::from_int(&r, u);
            let res = drazin_finite(&a).unwrap();
            assert_eq!(res.index, 0);
            assert!((&res.inverse * &a).is_one());
        }
    }

    #[test]
    fn nilpotent_matrix() {
        let r = Ring::matrix(2, Ring::prime_field(2).unwrap()).unwrap();
        let res = drazin_finite(&Element::from_int_rows(&r, &[[0, 1], [0, 0]]).unwrap()).unwrap();
        assert!(res.inverse.is_zero());
        assert_eq!(res.index, 2);
    }

    #[test]
    fn zero_and_idempotents() {
        let r = Ring::modular(12).unwrap();
        let zero = drazin_finite(&Element::zero(&r)).unwrap();
        assert_eq!((zero.inverse.is_zero(), zero.index), (true, 1));
        let four = Element::from_int(&r, 4);
        assert_eq!(drazin_finite(&four).unwrap(), DrazinResult { inverse: four, index: 1 });
    }

    #[test]
    fn infinite_rings_are_unsupported() {
        assert!(matches!(drazin_finite(&Element::one(&Ring::integers())), Err(Error::Unsupported(_))));
    }

    #[test]
    fn long_cycles_hit_the_step_limit() {
        let f = Ring::prime_field(1_000_000_007).unwrap();
        assert!(matches!(drazin_finite(&Element::from_int(&f, 5)), Err(Error::ResourceLimit { .. })));
    }
}
