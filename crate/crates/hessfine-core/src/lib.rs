//! Exact combinatorics of Hessenberg determinants with Schroder, Fine and
//! Catalan number entries.
//!
//! The crate is organized around checking one family of facts many ways:
//! determinants of lower Hessenberg matrices whose entries walk along a
//! combinatorial sequence land back on other combinatorial sequences. Each
//! claim is evaluated by independent routes (the determinant recurrence,
//! dense fraction-free elimination, two expansion formulas, generating
//! function coefficients, and exhaustive lattice path enumeration) and the
//! `verify` module compares them term by term.

pub mod error;
pub mod hessenberg;
pub mod numeric;
pub mod paths;
pub mod sequences;
pub mod series;
pub mod trudi;
pub mod verify;

pub use error::{Error, Result};
pub use numeric::{Integer, Rational};
