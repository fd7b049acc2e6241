//! Exact linear algebra over the rationals and prime fields.

mod echelon;
mod matrix;
mod subspace;

pub use echelon::{SparseEchelon, SparseRow};
pub use matrix::{kernel, rref, solve, AffineSpace, Matrix};
pub use subspace::Subspace;

use crate::scalar::{Field, Scalar};

pub fn zero_vector(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit_vector(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

/// `acc += c·v`.
pub fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}
