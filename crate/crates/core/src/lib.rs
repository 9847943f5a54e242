//! Exact Drazin inverses in concrete rings.
//!
//! The crate provides exact arithmetic for modular integers, prime fields,
//! the integers, the rationals, square matrices and direct products; a
//! Drazin engine that decides membership and computes inverses and indices;
//! closed-form constructions (orthogonal sums, commuting products, Cline's
//! formula, Peirce combinations, corner decompositions); executable
//! equivalence checks for products, differences, commutators and
//! anti-commutators of idempotents; and a brute-force oracle for small
//! finite rings.
//!
//! ```
//! use drazin::drazin::drazin;
//! use drazin::ring::{Element, Ring};
//!
//! let z12 = Ring::modular(12).unwrap();
//! let res = drazin(&Element::from_int(&z12, 2)).unwrap();
//! assert_eq!(res.inverse, Element::from_int(&z12, 8));
//! assert_eq!(res.index, 2);
//! ```

pub mod commands;
pub mod drazin;
pub mod error;
pub mod oracle;
pub mod par;
pub mod report;
pub mod ring;
pub mod theorems;

pub use error::{Error, Result};
