//! Explicit `(2,3)`-generating pairs of the special unitary groups
//! `SU_n(q^2)` and exact verification of their properties.
//!
//! The crate is `no_std` (with `alloc`): finite-field and polynomial
//! arithmetic, dense matrices, the constructions, and the checks that feed a
//! [`certificate::Certificate`]. Text formats and the command line live in
//! the `unigen` crate.
//!
//! ```
//! use unigen_core::gf::FieldSpec;
//! use unigen_core::verify::check_conditions;
//!
//! // GF(9) = GF(3)[t]/(t^2 + t + 2), a = t
//! let field = FieldSpec::new(3, 1, Some(&[2, 1, 1])).unwrap();
//! assert!(check_conditions(&field, field.generator()).all());
//! ```
#![cfg_attr(not(feature = "std"), no_std)]
// elimination loops read more clearly with explicit indices
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod certificate;
pub mod construct;
pub mod error;
pub mod gf;
pub mod identities;
pub mod matrix;
pub mod poly;
mod primepoly;
pub mod verify;
pub mod zpoly;

pub use error::{Error, Result};
