use serde::Serialize;

use crate::algebra::{Product, Verdict};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::identity::{CompatKind, Identity};

/// A violated identity instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Index into [`CompatKind::identities`].
    pub identity: usize,
    pub triple: (usize, usize, usize),
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompatReport {
    pub kind: CompatKind,
    pub holds: bool,
    pub witness: Option<Witness>,
}

/// Coefficient-wise sum of two products.
pub fn sum_product(p1: &Product, p2: &Product) -> Result<Product> {
    p1.sum(p2)
}

fn require_associative_base(dot: &Product) -> Result<()> {
    match dot.is_associative() {
        Verdict::Pass => Ok(()),
        Verdict::Fail((i, j, k)) => Err(Error::NonAssociativeBase(i, j, k)),
    }
}

/// A basis triple with the two differing sides.
pub(crate) type Violation = ((usize, usize, usize), Vec<Scalar>, Vec<Scalar>);

/// First failing basis triple of one identity, in lexicographic order.
pub(crate) fn first_violation(id: &Identity, star: &Product, dot: &Product) -> Option<Violation> {
    let n = dot.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (l, r) = id.sides(star, dot, i, j, k);
                if l != r {
                    return Some(((i, j, k), l, r));
                }
            }
        }
    }
    None
}

/// Whether a single identity holds on every basis triple.
pub(crate) fn identity_holds(id: &Identity, star: &Product, dot: &Product) -> bool {
    first_violation(id, star, dot).is_none()
}

fn report(kind: CompatKind, star: &Product, dot: &Product) -> CompatReport {
    for (idx, id) in kind.identities().iter().enumerate() {
        if let Some((triple, lhs, rhs)) = first_violation(id, star, dot) {
            return CompatReport {
                kind,
                holds: false,
                witness: Some(Witness {
                    identity: idx,
                    triple,
                    lhs,
                    rhs,
                }),
            };
        }
    }
    CompatReport {
        kind,
        holds: true,
        witness: None,
    }
}

/// Evaluates the identities of `kind` with `·₁ = star`, `·₂ = dot` on all
/// basis triples. `dot` must be associative; `star` need not be.
pub fn check(kind: CompatKind, star: &Product, dot: &Product) -> Result<CompatReport> {
    star.check_same_shape(dot)?;
    require_associative_base(dot)?;
    Ok(report(kind, star, dot))
}

/// Compatibility decided both through associativity of the sum and through
/// the mixed identity; the two must agree for associative inputs.
pub fn check_compatible_dual(star: &Product, dot: &Product) -> Result<CompatReport> {
    star.check_same_shape(dot)?;
    require_associative_base(dot)?;
    if let Verdict::Fail((i, j, k)) = star.is_associative() {
        return Err(Error::NonAssociative(i, j, k));
    }
    let sum_associative = sum_product(star, dot)?.is_associative().is_pass();
    let r = report(CompatKind::Compatible, star, dot);
    if r.holds != sum_associative {
        return Err(Error::InternalContradiction {
            sum_associative,
            identity_holds: r.holds,
        });
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example_3dim, example_6dim, matrix_algebra, mutation};
    use crate::scalar::Field;

    const Q: Field = Field::Rationals;

    fn holds(kind: CompatKind, star: &Product, dot: &Product) -> bool {
        check(kind, star, dot).unwrap().holds
    }

    #[test]
    fn sum_of_3dim_products() {
        let (a, star, _) = example_3dim(Q).unwrap();
        let s = sum_product(&star, a.dot()).unwrap();
        let want = Product::from_i64(Q, 3, &[(0, 0, 0, 1), (0, 1, 1, 1), (0, 1, 2, 1)]).unwrap();
        assert_eq!(s, want);
        assert!(sum_product(a.dot(), &a.dot().neg()).unwrap().is_zero());
    }

    #[test]
    fn example_3dim_classification() {
        let (a, star, star2) = example_3dim(Q).unwrap();
        let dot = a.dot();
        assert!(holds(CompatKind::SwapMatching, &star, dot));
        assert!(!holds(CompatKind::IdMatching, &star, dot));
        assert!(!holds(CompatKind::Interchangeable, &star, dot));
        assert!(holds(CompatKind::IdMatching, &star2, dot));
        assert!(!holds(CompatKind::SwapMatching, &star2, dot));
        assert!(!holds(CompatKind::Interchangeable, &star2, dot));
    }

    #[test]
    fn example_6dim_classification() {
        let (a, star) = example_6dim(Q).unwrap();
        assert!(holds(CompatKind::Interchangeable, &star, a.dot()));
        assert!(!holds(CompatKind::IdMatching, &star, a.dot()));
        assert!(!holds(CompatKind::SwapMatching, &star, a.dot()));
    }

    #[test]
    fn dot_is_related_to_itself_in_every_way() {
        let m = matrix_algebra(2, Q).unwrap();
        for kind in CompatKind::ALL {
            assert!(holds(kind, m.dot(), m.dot()), "{kind}");
        }
    }

    #[test]
    fn witness_is_first_failure_and_recheckable() {
        let (a, star, _) = example_3dim(Q).unwrap();
        let r = check(CompatKind::IdMatching, &star, a.dot()).unwrap();
        let w = r.witness.unwrap();
        // (e1 ∗ e1) · e2 = e3 but e1 ∗ (e1 · e2) = e1 ∗ e3 = 0.
        assert_eq!((w.identity, w.triple), (0, (0, 0, 1)));
        let id = &CompatKind::IdMatching.identities()[w.identity];
        let (l, r) = id.sides(&star, a.dot(), 0, 0, 1);
        assert_eq!((l, r), (w.lhs, w.rhs));
    }

    #[test]
    fn non_associative_base_rejected() {
        let bad = Product::from_i64(Q, 2, &[(0, 0, 1, 1), (1, 0, 0, 1)]).unwrap();
        let z = Product::zero(Q, 2);
        assert_eq!(
            check(CompatKind::Compatible, &z, &bad),
            Err(Error::NonAssociativeBase(0, 0, 0))
        );
    }

    #[test]
    fn mismatch_rejected() {
        let z2 = Product::zero(Q, 2);
        let z3 = Product::zero(Q, 3);
        assert!(check(CompatKind::Compatible, &z2, &z3).is_err());
        assert!(check(CompatKind::Compatible, &z2, &Product::zero(Field::Prime(3), 2)).is_err());
    }

    #[test]
    fn dual_compatibility_examples() {
        let m = matrix_algebra(2, Q).unwrap();
        let e12: Vec<Scalar> = [0, 1, 0, 0].iter().map(|&v| Q.from_i64(v)).collect();
        let mx = mutation(m.dot(), &e12).unwrap();
        assert!(check_compatible_dual(&mx, m.dot()).unwrap().holds);
        assert!(check_compatible_dual(&Product::zero(Q, 4), m.dot()).unwrap().holds);
        let (a, star, _) = example_3dim(Q).unwrap();
        assert!(check_compatible_dual(&star, a.dot()).unwrap().holds);
    }
}
