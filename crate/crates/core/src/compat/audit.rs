use serde::Serialize;

use crate::algebra::{Product, Verdict};
use crate::error::{Error, Result};

use super::check::identity_holds;
use super::identity::CompatKind;

/// The equivalent characterisations of total compatibility for a pair of
/// associative products, each evaluated independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    /// 1. totally compatible.
    /// 2. interchangeable, and one matching equality (either σ) holds.
    /// 3. σ-matching for some σ, and one interchange equality holds.
    /// 4. σ₁-matching for some σ₁, and one matching equality for σ ≠ σ₁ holds.
    pub conditions: [bool; 4],
    /// 5. interchangeable and compatible; only evaluated away from characteristic 2.
    pub condition5: Option<bool>,
    pub contradiction: bool,
}

/// Evaluates every condition of the equivalence with `·₁ = p1`, `·₂ = p2`.
pub fn total_compatibility_audit(p1: &Product, p2: &Product) -> Result<AuditReport> {
    p1.check_same_shape(p2)?;
    if let Verdict::Fail((i, j, k)) = p2.is_associative() {
        return Err(Error::NonAssociativeBase(i, j, k));
    }
    if let Verdict::Fail((i, j, k)) = p1.is_associative() {
        return Err(Error::NonAssociative(i, j, k));
    }
    let each =
        |kind: CompatKind| -> Vec<bool> { kind.identities().iter().map(|id| identity_holds(id, p1, p2)).collect() };
    let id = each(CompatKind::IdMatching);
    let swap = each(CompatKind::SwapMatching);
    let inter = each(CompatKind::Interchangeable);
    let all = |v: &[bool]| v.iter().all(|&b| b);
    let any = |v: &[bool]| v.iter().any(|&b| b);

    let c1 = all(&each(CompatKind::TotallyCompatible));
    let c2 = all(&inter) && (any(&id) || any(&swap));
    let c3 = (all(&id) || all(&swap)) && any(&inter);
    let c4 = (all(&id) && any(&swap)) || (all(&swap) && any(&id));
    let conditions = [c1, c2, c3, c4];
    let condition5 = (p1.field().characteristic() != 2).then(|| all(&inter) && all(&each(CompatKind::Compatible)));
    let contradiction = conditions.iter().any(|&c| c != c1) || condition5.is_some_and(|c| c != c1);
    Ok(AuditReport {
        conditions,
        condition5,
        contradiction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example_3dim, rectangular_band_algebra, zero_algebra, BandSpec};
    use crate::scalar::Field;

    const Q: Field = Field::Rationals;

    #[test]
    fn scalar_multiple_is_totally_compatible() {
        let b = rectangular_band_algebra(BandSpec::new(2, 2).unwrap(), Q).unwrap();
        let lam = b.dot().scale(&Q.from_i64(3)).unwrap();
        let r = total_compatibility_audit(b.dot(), &lam).unwrap();
        assert_eq!(r.conditions, [true; 4]);
        assert_eq!(r.condition5, Some(true));
        assert!(!r.contradiction);
    }

    #[test]
    fn example_3dim_fails_consistently() {
        let (a, star, star2) = example_3dim(Q).unwrap();
        for s in [&star, &star2] {
            let r = total_compatibility_audit(s, a.dot()).unwrap();
            assert_eq!(r.conditions, [false; 4]);
            assert_eq!(r.condition5, Some(false));
            assert!(!r.contradiction);
        }
    }

    #[test]
    fn zero_algebra_accepts_any_associative_product() {
        let z = zero_algebra(3, Q).unwrap();
        let (a, star, _) = example_3dim(Q).unwrap();
        for p in [a.dot(), &star] {
            let r = total_compatibility_audit(p, z.dot()).unwrap();
            assert_eq!(r.conditions, [true; 4]);
        }
    }

    #[test]
    fn condition5_skipped_in_char_two() {
        let f2 = Field::prime(2).unwrap();
        let b = rectangular_band_algebra(BandSpec::new(1, 2).unwrap(), f2).unwrap();
        let r = total_compatibility_audit(b.dot(), b.dot()).unwrap();
        assert_eq!(r.condition5, None);
        assert!(!r.contradiction);
    }
}
