use serde::Serialize;

use crate::algebra::{Product, Verdict};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::solve::ProductSpace;

/// Default bound on the number of members enumerated over characteristic 2.
pub const DEFAULT_ENUM_CAP: u128 = 1 << 20;

/// The enumeration cap, overridable through `BICOMPAT_ENUM_CAP`.
pub fn enumeration_cap() -> u128 {
    std::env::var("BICOMPAT_ENUM_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_ENUM_CAP)
}

/// A non-associative member: coordinates in the space's canonical basis and
/// the first failing basis triple of that member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberWitness {
    pub coords: Vec<Scalar>,
    pub triple: (usize, usize, usize),
}

/// [`all_members_associative_with_cap`] with [`enumeration_cap`].
pub fn all_members_associative(ps: &ProductSpace) -> Result<Verdict<MemberWitness>> {
    all_members_associative_with_cap(ps, enumeration_cap())
}

/// Decides whether every product in the space is associative.
///
/// Away from characteristic 2 the associator of `Σ t_l B_l` is a quadratic
/// form in `t`, which vanishes identically iff `D(B_l, B_l) = 0` and
/// `D(B_l, B_m) + D(B_m, B_l) = 0` for `l < m`, where
/// `D(X, Y)(a, b, c) = (a X b) Y c − a X (b Y c)`. Over `𝔽₂` the space is
/// enumerated when it has at most `cap` members.
pub fn all_members_associative_with_cap(ps: &ProductSpace, cap: u128) -> Result<Verdict<MemberWitness>> {
    let basis = ps.basis_products();
    let field = ps.base.field();
    let s = basis.len();
    if field.characteristic() == 2 {
        let needed = if s >= 128 { u128::MAX } else { 1u128 << s };
        if needed > cap {
            return Err(Error::Undecided { needed, cap });
        }
        for mask in 1..needed {
            let coords: Vec<Scalar> = (0..s)
                .map(|l| if mask >> l & 1 == 1 { field.one() } else { field.zero() })
                .collect();
            if let Some(w) = witness_for(ps, coords)? {
                return Ok(Verdict::Fail(w));
            }
        }
        return Ok(Verdict::Pass);
    }
    let n = ps.base.dim();
    let unit = |l: usize| -> Vec<Scalar> {
        (0..s)
            .map(|m| if m == l { field.one() } else { field.zero() })
            .collect()
    };
    for (l, b) in basis.iter().enumerate() {
        if !polarization_vanishes(b, b, false, n) {
            return Ok(Verdict::Fail(
                witness_for(ps, unit(l))?.expect("diagonal term is the associator"),
            ));
        }
    }
    for l in 0..s {
        for m in l + 1..s {
            if !polarization_vanishes(&basis[l], &basis[m], true, n) {
                let coords: Vec<Scalar> = (0..s)
                    .map(|t| if t == l || t == m { field.one() } else { field.zero() })
                    .collect();
                return Ok(Verdict::Fail(
                    witness_for(ps, coords)?.expect("associator of B_l + B_m is the cross term"),
                ));
            }
        }
    }
    Ok(Verdict::Pass)
}

fn witness_for(ps: &ProductSpace, coords: Vec<Scalar>) -> Result<Option<MemberWitness>> {
    let p = ps.member(&coords)?;
    Ok(match p.is_associative() {
        Verdict::Pass => None,
        Verdict::Fail(triple) => Some(MemberWitness { coords, triple }),
    })
}

fn polarization(x: &Product, y: &Product, i: usize, j: usize, k: usize) -> Vec<Scalar> {
    let left = y.mul_right_basis(&x.basis_product_dense(i, j), k);
    let right = x.mul_left_basis(i, &y.basis_product_dense(j, k));
    left.iter().zip(&right).map(|(a, b)| a - b).collect()
}

/// `D(x, y) = 0`, or `D(x, y) + D(y, x) = 0` when `symmetric`.
fn polarization_vanishes(x: &Product, y: &Product, symmetric: bool, n: usize) -> bool {
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut d = polarization(x, y, i, j, k);
                if symmetric {
                    for (a, b) in d.iter_mut().zip(polarization(y, x, i, j, k)) {
                        *a += &b;
                    }
                }
                if d.iter().any(|c| !c.is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compat::{solve_linear, CompatKind};
    use crate::constructions::{matrix_algebra, rectangular_band_algebra, zero_algebra, BandSpec};
    use crate::scalar::Field;

    const Q: Field = Field::Rationals;

    #[test]
    fn scalar_multiples_of_band_are_associative() {
        let b = rectangular_band_algebra(BandSpec::new(2, 2).unwrap(), Q).unwrap();
        let ps = solve_linear(CompatKind::TotallyCompatible, b.dot()).unwrap();
        assert!(all_members_associative(&ps).unwrap().is_pass());
    }

    #[test]
    fn mutations_are_associative() {
        let m = matrix_algebra(2, Q).unwrap();
        let ps = solve_linear(CompatKind::IdMatching, m.dot()).unwrap();
        assert!(all_members_associative(&ps).unwrap().is_pass());
    }

    #[test]
    fn zero_algebra_space_has_non_associative_members() {
        // Every bilinear map is totally compatible with the zero product.
        let z = zero_algebra(2, Q).unwrap();
        let ps = solve_linear(CompatKind::TotallyCompatible, z.dot()).unwrap();
        assert_eq!(ps.dim(), 8);
        let Verdict::Fail(w) = all_members_associative(&ps).unwrap() else {
            panic!("expected a non-associative member");
        };
        let p = ps.member(&w.coords).unwrap();
        assert_eq!(p.is_associative(), Verdict::Fail(w.triple));
    }

    #[test]
    fn char_two_enumeration_and_cap() {
        let f2 = Field::prime(2).unwrap();
        let b = rectangular_band_algebra(BandSpec::new(2, 2).unwrap(), f2).unwrap();
        let ps = solve_linear(CompatKind::IdMatching, b.dot()).unwrap();
        assert!(all_members_associative_with_cap(&ps, 1 << 10).unwrap().is_pass());
        assert_eq!(
            all_members_associative_with_cap(&ps, 8),
            Err(Error::Undecided { needed: 16, cap: 8 })
        );
    }
}
