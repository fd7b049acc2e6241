//! Free non-unital algebras: noncommutative polynomials with star maps and
//! their extensions, commutative polynomials with the closed-form products,
//! and truncated linear oracles for centroids and totally compatible stars.

mod centroid;
mod cpoly;
mod ncpoly;
mod rigidity;
mod star;

pub use centroid::{truncated_centroid_dim, FreeKind};
pub use cpoly::{
    check_cpoly_identities, cpoly_multi_var_product, cpoly_single_var_product, CPoly, CStar, Monomial, MonomialWitness,
};
pub use ncpoly::{nc_add, nc_degree, nc_mul, NCPoly, Word};
pub use rigidity::{star_space, StarSpace};
pub use star::{
    check_word_identities, decompose_left, decompose_right, extend_star, scale_star, star_condition,
    verify_id_matching_truncated, verify_id_matching_truncated_with, StarMap, StarWitness, WordWitness,
};

use crate::compat::Term;

/// Addition for the polynomial types, used to sum identity sides.
pub(crate) trait Ring: Clone {
    fn plus(&self, other: &Self) -> Self;
}

pub(crate) fn term_value<P: Ring>(
    t: Term,
    a: &P,
    b: &P,
    c: &P,
    star: &dyn Fn(&P, &P) -> P,
    dot: &dyn Fn(&P, &P) -> P,
) -> P {
    match t {
        Term::StarDotLeft => dot(&star(a, b), c),
        Term::DotStarLeft => star(&dot(a, b), c),
        Term::StarDotRight => star(a, &dot(b, c)),
        Term::DotStarRight => dot(a, &star(b, c)),
    }
}

pub(crate) fn side_value<P: Ring>(
    terms: &[Term],
    a: &P,
    b: &P,
    c: &P,
    star: &dyn Fn(&P, &P) -> P,
    dot: &dyn Fn(&P, &P) -> P,
) -> P {
    let mut it = terms.iter().map(|&t| term_value(t, a, b, c, star, dot));
    let first = it.next().expect("identity sides are nonempty");
    it.fold(first, |acc, v| acc.plus(&v))
}
