use drazin::ring::{enumerate_elements, Element, IdempotentFamily, Ring, DEFAULT_CAP};
use proptest::prelude::*;

fn small_rings() -> Vec<Ring> {
    let mut rings: Vec<Ring> = (2..=16).map(|n| Ring::modular(n).unwrap()).collect();
    rings.push(Ring::prime_field(13).unwrap());
    rings.push(Ring::matrix(2, Ring::prime_field(2).unwrap()).unwrap());
    rings.push(Ring::product(Ring::modular(3).unwrap(), Ring::modular(2).unwrap()));
    rings.push(Ring::product(Ring::modular(2).unwrap(), Ring::modular(8).unwrap()));
    rings.push(Ring::matrix(1, Ring::modular(9).unwrap()).unwrap());
    rings
}

fn check_axioms(x: &Element, y: &Element, z: &Element) -> Result<(), String> {
    let one = Element::one(x.ring());
    let zero = Element::zero(x.ring());
    let checks = [
        (&(x + y) + z == x + &(y + z), "additive associativity"),
        (&(x * y) * z == x * &(y * z), "multiplicative associativity"),
        (x * &(y + z) == &(x * y) + &(x * z), "left distributivity"),
        (&(x + y) * z == &(x * z) + &(y * z), "right distributivity"),
        (x + y == y + x, "additive commutativity"),
        (&one * x == *x && x * &one == *x, "unity"),
        (x + &(-x) == zero, "additive inverse"),
        (x - y == x + &(-y), "subtraction"),
    ];
    match checks.iter().find(|(ok, _)| !ok) {
        Some((_, law)) => Err(format!("{law} fails for x = {x}, y = {y}, z = {z}")),
        None => Ok(()),
    }
}

#[test]
fn ring_axioms_exhaustively_on_rings_up_to_16() {
    for ring in small_rings() {
        let all: Vec<Element> = enumerate_elements(&ring, DEFAULT_CAP).unwrap().collect();
        assert!(all.len() <= 16);
        for x in &all {
            for y in &all {
                for z in &all {
                    check_axioms(x, y, z).unwrap();
                }
            }
        }
    }
}

#[test]
fn exhaustive_idempotents_match_filtering() {
    for ring in small_rings().into_iter().chain([Ring::matrix(2, Ring::prime_field(3).unwrap()).unwrap()]) {
        let from_family = IdempotentFamily::exhaustive(&ring).idempotents(DEFAULT_CAP).unwrap();
        let filtered: Vec<Element> =
            enumerate_elements(&ring, DEFAULT_CAP).unwrap().filter(|e| &(e * e) == e).collect();
        assert_eq!(from_family, filtered, "{ring}");
    }
}

#[test]
fn canonicalisation_is_stable() {
    for ring in small_rings() {
        for x in enumerate_elements(&ring, DEFAULT_CAP).unwrap() {
            let y = &x * &x;
            let again = Element::new(y.ring(), y.value().clone()).unwrap();
            assert_eq!(again, y);
        }
    }
}

fn z_mat(entries: [i64; 4]) -> Element {
    let r = Ring::matrix(2, Ring::integers()).unwrap();
    Element::from_int_rows(&r, &[[entries[0], entries[1]], [entries[2], entries[3]]]).unwrap()
}

fn q_mat(entries: [(i64, i64); 4]) -> Element {
    let q = Ring::rationals();
    let r = Ring::matrix(2, q.clone()).unwrap();
    let e: Vec<Element> = entries.iter().map(|&(n, d)| Element::rational(&q, n, d).unwrap()).collect();
    Element::matrix(&r, vec![e[..2].to_vec(), e[2..].to_vec()]).unwrap()
}

fn mod_mat(n: u64, entries: [i64; 9]) -> Element {
    let r = Ring::matrix(3, Ring::modular(n).unwrap()).unwrap();
    let e = entries;
    Element::from_int_rows(&r, &[[e[0], e[1], e[2]], [e[3], e[4], e[5]], [e[6], e[7], e[8]]]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn integer_matrix_laws(a in any::<[i32; 4]>(), b in any::<[i32; 4]>(), c in any::<[i32; 4]>()) {
        let f = |v: [i32; 4]| z_mat(v.map(i64::from));
        prop_assert!(check_axioms(&f(a), &f(b), &f(c)).is_ok());
    }

    #[test]
    fn rational_matrix_laws(v in proptest::collection::vec((-30i64..30, 1i64..12), 12)) {
        let m = |s: &[(i64, i64)]| q_mat([s[0], s[1], s[2], s[3]]);
        prop_assert!(check_axioms(&m(&v[0..4]), &m(&v[4..8]), &m(&v[8..12])).is_ok());
    }

    #[test]
    fn modular_matrix_laws(n in 2u64..40, a in any::<[i16; 9]>(), b in any::<[i16; 9]>(), c in any::<[i16; 9]>()) {
        let f = |v: [i16; 9]| mod_mat(n, v.map(i64::from));
        prop_assert!(check_axioms(&f(a), &f(b), &f(c)).is_ok());
    }

    #[test]
    fn large_modulus_laws(n in (1u64 << 40)..u64::MAX, x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let r = Ring::modular(n).unwrap();
        let e = |k: u64| Element::from_int(&r, (k >> 1) as i64);
        prop_assert!(check_axioms(&e(x), &e(y), &e(z)).is_ok());
    }

    #[test]
    fn parametrized_family_is_idempotent(bound in 1u64..6) {
        let fam = IdempotentFamily::parametrized_2x2(bound);
        for e in fam.idempotents(DEFAULT_CAP).unwrap() {
            prop_assert_eq!(&(&e * &e), &e);
        }
    }
}
