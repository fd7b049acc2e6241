//! Finite-dimensional algebras as structure-constant tensors.

mod finite;
mod product;
mod structure;

pub use finite::{apply_endo, format_with_labels, Algebra, Endomorphism};
pub use product::{Product, Verdict};
pub use structure::{annihilator, center, centralizer, centroid, find_units, is_idempotent_algebra, Side};
