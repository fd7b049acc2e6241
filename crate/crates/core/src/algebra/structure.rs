//! Structural subspaces of a product: units, center, centralizers,
//! annihilator and centroid. Each is the solution set of a linear system
//! assembled from the structure constants.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{solve, AffineSpace, Matrix, SparseEchelon, Subspace};
use crate::scalar::Scalar;

use super::product::Product;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// Accumulates linear equations row-by-row keyed by an output coordinate.
struct Equations {
    rows: BTreeMap<usize, BTreeMap<usize, Scalar>>,
}

impl Equations {
    fn new() -> Self {
        Self { rows: BTreeMap::new() }
    }

    fn add(&mut self, row: usize, unknown: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let r = self.rows.entry(row).or_default();
        match r.get_mut(&unknown) {
            Some(e) => *e += c,
            None => {
                r.insert(unknown, c.clone());
            }
        }
    }

    fn flush_into(self, e: &mut SparseEchelon) {
        for (_, r) in self.rows {
            e.insert(r);
        }
    }
}

/// All `e` with `e * b_i = b_i` (left), `b_i * e = b_i` (right), or both.
/// Returns `None` when no such element exists.
pub fn find_units(p: &Product, side: Side) -> Result<Option<AffineSpace>> {
    let n = p.dim();
    let field = p.field();
    let left = matches!(side, Side::Left | Side::TwoSided);
    let right = matches!(side, Side::Right | Side::TwoSided);
    let blocks = usize::from(left) + usize::from(right);
    let mut m = Matrix::zeros(field, blocks * n * n, n);
    let mut rhs = vec![field.zero(); blocks * n * n];
    let mut block = 0;
    if left {
        // (Σ_m e_m b_m) * b_i = b_i, coordinate t.
        for i in 0..n {
            for t in 0..n {
                let row = block * n * n + i * n + t;
                for u in 0..n {
                    m.set(row, u, p.coefficient(u, i, t));
                }
                if i == t {
                    rhs[row] = field.one();
                }
            }
        }
        block += 1;
    }
    if right {
        for i in 0..n {
            for t in 0..n {
                let row = block * n * n + i * n + t;
                for u in 0..n {
                    m.set(row, u, p.coefficient(i, u, t));
                }
                if i == t {
                    rhs[row] = field.one();
                }
            }
        }
    }
    solve(&m, &rhs)
}

/// Whether the span of all basis products is the whole space.
pub fn is_idempotent_algebra(p: &Product) -> bool {
    let n = p.dim();
    let mut e = SparseEchelon::new(p.field(), n);
    for i in 0..n {
        for j in 0..n {
            e.insert(p.basis_product(i, j).to_vec());
            if e.rank() == n {
                return true;
            }
        }
    }
    e.rank() == n
}

/// `{a : a * x = x * a}`.
pub fn centralizer(p: &Product, x: &[Scalar]) -> Result<Subspace> {
    let n = p.dim();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    let mut eqs = Equations::new();
    for u in 0..n {
        let bu = p.basis_vector_dense(u);
        let diff: Vec<Scalar> = p
            .multiply(&bu, x)?
            .iter()
            .zip(p.mul(x, &bu))
            .map(|(l, r)| l - &r)
            .collect();
        for (t, c) in diff.iter().enumerate() {
            eqs.add(t, u, c);
        }
    }
    let mut e = SparseEchelon::new(p.field(), n);
    eqs.flush_into(&mut e);
    Ok(Subspace::from_sparse_rows(p.field(), n, e.into_kernel()))
}

/// `{x : x * b_i = b_i * x for all i}`.
pub fn center(p: &Product) -> Subspace {
    let n = p.dim();
    let mut e = SparseEchelon::new(p.field(), n);
    for i in 0..n {
        let mut eqs = Equations::new();
        for u in 0..n {
            for (t, c) in p.basis_product(u, i) {
                eqs.add(*t, u, c);
            }
            for (t, c) in p.basis_product(i, u) {
                eqs.add(*t, u, &-c);
            }
        }
        eqs.flush_into(&mut e);
    }
    Subspace::from_sparse_rows(p.field(), n, e.into_kernel())
}

/// Two-sided annihilator `{a : a * b_i = b_i * a = 0 for all i}`.
pub fn annihilator(p: &Product) -> Subspace {
    let n = p.dim();
    let mut e = SparseEchelon::new(p.field(), n);
    for i in 0..n {
        let mut left = Equations::new();
        let mut right = Equations::new();
        for u in 0..n {
            for (t, c) in p.basis_product(u, i) {
                left.add(*t, u, c);
            }
            for (t, c) in p.basis_product(i, u) {
                right.add(*t, u, c);
            }
        }
        left.flush_into(&mut e);
        right.flush_into(&mut e);
    }
    Subspace::from_sparse_rows(p.field(), n, e.into_kernel())
}

/// Centroid `{φ : x * φ(y) = φ(x * y) = φ(x) * y}` as a subspace of the
/// row-major `n²` coordinates of `φ`'s matrix (`φ(b_c) = Σ_r m[r][c] b_r`).
pub fn centroid(p: &Product) -> Subspace {
    let n = p.dim();
    let field = p.field();
    let var = |r: usize, c: usize| r * n + c;
    let mut e = SparseEchelon::new(field, n * n);
    for i in 0..n {
        for j in 0..n {
            // Per output coordinate t:
            //   A = b_i * φ(b_j)   = Σ_r m[r][j] c[i][r][t]
            //   B = φ(b_i * b_j)   = Σ_k c[i][j][k] m[t][k]
            //   C = φ(b_i) * b_j   = Σ_r m[r][i] c[r][j][t]
            let mut a_minus_b = Equations::new();
            let mut b_minus_c = Equations::new();
            for r in 0..n {
                for (t, c) in p.basis_product(i, r) {
                    a_minus_b.add(*t, var(r, j), c);
                }
                for (t, c) in p.basis_product(r, j) {
                    b_minus_c.add(*t, var(r, i), &-c);
                }
            }
            for (k, c) in p.basis_product(i, j) {
                for t in 0..n {
                    a_minus_b.add(t, var(t, *k), &-c);
                    b_minus_c.add(t, var(t, *k), c);
                }
            }
            a_minus_b.flush_into(&mut e);
            b_minus_c.flush_into(&mut e);
        }
    }
    Subspace::from_sparse_rows(field, n * n, e.into_kernel())
}

impl Product {
    pub(crate) fn basis_vector_dense(&self, i: usize) -> Vec<Scalar> {
        crate::linalg::unit_vector(self.field(), self.dim(), i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_algebra, rectangular_band_algebra, zero_algebra, BandSpec};
    use crate::scalar::Field;

    const Q: Field = Field::Rationals;

    fn band(r: usize, c: usize) -> Product {
        rectangular_band_algebra(BandSpec::new(r, c).unwrap(), Q)
            .unwrap()
            .dot()
            .clone()
    }

    #[test]
    fn band_annihilator_2x2() {
        let ann = annihilator(&band(2, 2));
        assert_eq!(ann, Subspace::span_i64(Q, 4, &[&[1, -1, -1, 1]]).unwrap());
    }

    #[test]
    fn band_annihilator_dimension() {
        for (r, c) in [(1, 1), (1, 3), (2, 3), (3, 3)] {
            assert_eq!(annihilator(&band(r, c)).dim(), (r - 1) * (c - 1), "{r}x{c}");
        }
    }

    #[test]
    fn band_centroid_is_scalars() {
        let c = centroid(&band(2, 3));
        assert_eq!(c.dim(), 1);
        let id = crate::algebra::Endomorphism::identity(Q, 6);
        assert!(c.contains(&id.to_coords()).unwrap());
    }

    #[test]
    fn matrix_algebra_center_and_units() {
        let m = matrix_algebra(2, Q).unwrap();
        assert_eq!(center(m.dot()), Subspace::span_i64(Q, 4, &[&[1, 0, 0, 1]]).unwrap());
        assert_eq!(centroid(m.dot()).dim(), 1);
        let u = find_units(m.dot(), Side::TwoSided).unwrap().unwrap();
        assert_eq!(u.dim(), 0);
        assert_eq!(u.particular, crate::linalg::Matrix::identity(Q, 2).entries().to_vec());
        assert!(is_idempotent_algebra(m.dot()));
    }

    #[test]
    fn zero_algebra_structure() {
        let z = zero_algebra(3, Q).unwrap();
        assert_eq!(centroid(z.dot()).dim(), 9);
        assert_eq!(annihilator(z.dot()).dim(), 3);
        assert!(find_units(z.dot(), Side::Left).unwrap().is_none());
        assert!(!is_idempotent_algebra(z.dot()));
    }

    #[test]
    fn band_units_by_side() {
        // Every element of a 1×n band is a left unit candidate after
        // normalising coefficients to sum 1; there are no two-sided ones.
        let b = band(1, 3);
        assert_eq!(find_units(&b, Side::Left).unwrap().unwrap().dim(), 2);
        assert!(find_units(&b, Side::Right).unwrap().is_none());
        assert!(find_units(&band(2, 2), Side::TwoSided).unwrap().is_none());
    }

    #[test]
    fn centralizer_of_band_idempotent() {
        let b = band(2, 2);
        let e11 = crate::linalg::unit_vector(Q, 4, 0);
        let c = centralizer(&b, &e11).unwrap();
        for v in c.basis_vectors() {
            assert_eq!(b.mul(&v, &e11), b.mul(&e11, &v));
        }
        let mut oracle = SparseEchelon::new(Q, 4);
        // Coordinates: x e11 + y e12 + z e21 + w e22.
        // x·e11 = (x+y) e11 + (z+w) e21; e11·x = (x+z) e11 + (y+w) e12.
        // Equal iff y = z and z + w = 0 and y + w = 0.
        oracle.insert(vec![(1, Q.one()), (2, -Q.one())]);
        oracle.insert(vec![(2, Q.one()), (3, Q.one())]);
        oracle.insert(vec![(1, Q.one()), (3, Q.one())]);
        let want = Subspace::from_sparse_rows(Q, 4, oracle.into_kernel());
        assert_eq!(c, want);
        assert_eq!(c.dim(), 2);
    }

    #[test]
    fn center_of_band_is_annihilator() {
        // Central elements have zero row and column sums, i.e. the annihilator.
        assert_eq!(center(&band(2, 2)), annihilator(&band(2, 2)));
        assert_eq!(center(&band(1, 1)).dim(), 1);
    }
}
