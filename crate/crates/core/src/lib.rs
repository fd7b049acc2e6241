//! Exact toolkit for pairs of bilinear products on finite-dimensional
//! associative algebras: checking the compatible, matching, interchangeable
//! and totally compatible relations, solving for every product in such a
//! relation with a fixed one, and the free-algebra counterparts.

pub mod algebra;
pub mod compat;
pub mod constructions;
pub mod error;
pub mod free;
pub mod io;
pub mod linalg;
pub mod scalar;
pub mod suite;

pub use error::{Error, Result};
pub use scalar::{Field, Scalar};
