use std::collections::BTreeMap;
use std::thread;

use crate::algebra::{Product, Verdict};
use crate::error::{Error, Result};
use crate::linalg::{SparseEchelon, SparseRow, Subspace};
use crate::scalar::Scalar;

use super::identity::{CompatKind, Identity};

/// Every bilinear product satisfying the identities of `kind` against `base`,
/// as a subspace of the `n³` coefficient space (see [`Product::to_coords`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSpace {
    pub base: Product,
    pub kind: CompatKind,
    pub space: Subspace,
}

impl ProductSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Canonical basis read back as products.
    pub fn basis_products(&self) -> Vec<Product> {
        let n = self.base.dim();
        self.space
            .basis()
            .row_iter()
            .map(|row| Product::from_coords(self.base.field(), n, row).expect("ambient dim is n³"))
            .collect()
    }

    /// The member with the given coordinates in the canonical basis.
    pub fn member(&self, coords: &[Scalar]) -> Result<Product> {
        let v = self.space.combine(coords)?;
        Product::from_coords(self.base.field(), self.base.dim(), &v)
    }

    pub fn contains(&self, p: &Product) -> Result<bool> {
        p.check_same_shape(&self.base)?;
        self.space.contains(&p.to_coords())
    }
}

/// Equations of one identity over all basis triples, lexicographic triple
/// order, one row per output coordinate.
fn identity_rows(id: &Identity, dot: &Product) -> Vec<SparseRow> {
    let n = dot.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut acc: BTreeMap<usize, BTreeMap<usize, Scalar>> = BTreeMap::new();
                let mut push = |sign: bool, t: usize, u: usize, c: &Scalar| {
                    let e = acc.entry(t).or_default().entry(u).or_insert_with(|| dot.field().zero());
                    if sign {
                        *e += c;
                    } else {
                        *e -= c;
                    }
                };
                for term in id.lhs {
                    term.linearize(dot, i, j, k, |t, u, c| push(true, t, u, c));
                }
                for term in id.rhs {
                    term.linearize(dot, i, j, k, |t, u, c| push(false, t, u, c));
                }
                for (_, row) in acc {
                    let row: SparseRow = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
    }
    rows
}

fn reduce(field: crate::scalar::Field, cols: usize, rows: Vec<SparseRow>) -> SparseEchelon {
    let mut e = SparseEchelon::new(field, cols);
    for r in rows {
        if e.rank() == cols {
            break;
        }
        e.insert(r);
    }
    e
}

/// [`solve_linear_with`] on a single worker.
pub fn solve_linear(kind: CompatKind, dot: &Product) -> Result<ProductSpace> {
    solve_linear_with(kind, dot, 1)
}

/// Solves the linear system of `kind`'s identities in the unknown `∗`.
///
/// With more than one worker, the identities are reduced independently on
/// separate threads and the partial echelon forms are merged in identity
/// order. The result is canonical, so it does not depend on `workers`.
pub fn solve_linear_with(kind: CompatKind, dot: &Product, workers: usize) -> Result<ProductSpace> {
    if let Verdict::Fail((i, j, k)) = dot.is_associative() {
        return Err(Error::NonAssociativeBase(i, j, k));
    }
    let field = dot.field();
    let n = dot.dim();
    let cols = n * n * n;
    let ids = kind.identities();
    let partials: Vec<Vec<SparseRow>> = if workers <= 1 || ids.len() == 1 {
        ids.iter()
            .map(|id| reduce(field, cols, identity_rows(id, dot)).into_rref())
            .collect()
    } else {
        let chunk = ids.len().div_ceil(workers.min(ids.len()));
        thread::scope(|s| {
            let handles: Vec<_> = ids
                .chunks(chunk)
                .map(|group| {
                    s.spawn(move || {
                        group
                            .iter()
                            .map(|id| reduce(field, cols, identity_rows(id, dot)).into_rref())
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("solver worker panicked"))
                .collect()
        })
    };
    let merged = reduce(field, cols, partials.into_iter().flatten().collect());
    Ok(ProductSpace {
        base: dot.clone(),
        kind,
        space: Subspace::from_sparse_rows(field, cols, merged.into_kernel()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compat::check;
    use crate::constructions::{example_band22, matrix_algebra, mutation, rectangular_band_algebra, BandSpec};
    use crate::linalg::unit_vector;
    use crate::scalar::Field;

    const Q: Field = Field::Rationals;

    fn band(r: usize, c: usize) -> Product {
        rectangular_band_algebra(BandSpec::new(r, c).unwrap(), Q)
            .unwrap()
            .dot()
            .clone()
    }

    #[test]
    fn band22_dimensions() {
        let b = band(2, 2);
        assert_eq!(solve_linear(CompatKind::IdMatching, &b).unwrap().dim(), 4);
        assert_eq!(solve_linear(CompatKind::SwapMatching, &b).unwrap().dim(), 5);
        let tc = solve_linear(CompatKind::TotallyCompatible, &b).unwrap();
        assert_eq!(tc.dim(), 1);
        assert!(tc.contains(&b).unwrap());
    }

    #[test]
    fn members_satisfy_their_identities() {
        let b = band(2, 2);
        for kind in CompatKind::ALL {
            let ps = solve_linear(kind, &b).unwrap();
            for p in ps.basis_products() {
                assert!(check(kind, &p, &b).unwrap().holds, "{kind}");
            }
        }
    }

    #[test]
    fn matrix_id_matching_is_mutation_span() {
        let m = matrix_algebra(2, Q).unwrap();
        let ps = solve_linear(CompatKind::IdMatching, m.dot()).unwrap();
        let muts: Vec<Vec<Scalar>> = (0..4)
            .map(|i| mutation(m.dot(), &unit_vector(Q, 4, i)).unwrap().to_coords())
            .collect();
        assert_eq!(ps.space, Subspace::span(Q, 64, &muts).unwrap());
        assert_eq!(ps.dim(), 4);
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let b = band(2, 3);
        for kind in CompatKind::ALL {
            let one = solve_linear_with(kind, &b, 1).unwrap();
            let four = solve_linear_with(kind, &b, 4).unwrap();
            assert_eq!(one, four);
        }
    }

    #[test]
    fn band22_example_lies_in_swap_space() {
        let (a, star) = example_band22(Q).unwrap();
        let ps = solve_linear(CompatKind::SwapMatching, a.dot()).unwrap();
        assert!(ps.contains(&star).unwrap());
        let tc = solve_linear(CompatKind::TotallyCompatible, a.dot()).unwrap();
        assert!(!tc.contains(&star).unwrap());
    }

    #[test]
    fn member_round_trip() {
        let ps = solve_linear(CompatKind::IdMatching, &band(2, 2)).unwrap();
        let coords: Vec<Scalar> = (1..=4).map(|v| Q.from_i64(v)).collect();
        let p = ps.member(&coords).unwrap();
        assert!(ps.contains(&p).unwrap());
    }
}
