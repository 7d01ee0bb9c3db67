//! Exact computations with affine semigroups in ℕ^p.

pub mod error;
pub mod lattice;
pub mod semigroup;
pub mod ideal;
pub mod enumerate;
pub mod med;
pub mod fastmember;
pub mod format;
pub mod plot;

pub use error::{Error, Result};
