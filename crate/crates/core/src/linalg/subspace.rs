use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

use super::echelon::{SparseEchelon, SparseRow};
use super::matrix::{check_field, sparse, Matrix};

/// A linear subspace of `field^ambient_dim`, held by its unique reduced row
/// echelon basis so that equality is entry-wise equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(field: Field, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let mut e = SparseEchelon::new(field, ambient_dim);
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
            check_field(field, v)?;
            e.insert(sparse(v));
        }
        Ok(Self::from_echelon(e))
    }

    pub fn span_i64(field: Field, ambient_dim: usize, vectors: &[&[i64]]) -> Result<Self> {
        let vs: Vec<Vec<Scalar>> = vectors
            .iter()
            .map(|v| v.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::span(field, ambient_dim, &vs)
    }

    pub(crate) fn from_sparse_rows(field: Field, ambient_dim: usize, rows: Vec<SparseRow>) -> Self {
        let mut e = SparseEchelon::new(field, ambient_dim);
        for r in rows {
            e.insert(r);
        }
        Self::from_echelon(e)
    }

    pub(crate) fn from_echelon(e: SparseEchelon) -> Self {
        let field = e.field();
        let ambient_dim = e.cols();
        let rows = e.into_rref();
        let mut basis = Matrix::zeros(field, rows.len(), ambient_dim);
        let mut pivots = Vec::with_capacity(rows.len());
        for (r, row) in rows.into_iter().enumerate() {
            pivots.push(row[0].0);
            for (c, v) in row {
                basis.set(r, c, v);
            }
        }
        Self {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Canonical basis: rows of the reduced row echelon form.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_iter().map(<[Scalar]>::to_vec).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        Ok(())
    }

    /// Membership by reduction against the echelon basis.
    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        check_field(self.field(), v)?;
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let factor = w[p].clone();
            for (c, b) in self.basis.row(r).iter().enumerate() {
                if !b.is_zero() {
                    w[c] -= &(b * &factor);
                }
            }
        }
        Ok(w.iter().all(Scalar::is_zero))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        // RREF rows have 1 at their pivot and 0 at the other pivots.
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Linear combination of the canonical basis.
    pub fn combine(&self, coords: &[Scalar]) -> Result<Vec<Scalar>> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: coords.len(),
            });
        }
        check_field(self.field(), coords)?;
        let mut out = vec![self.field().zero(); self.ambient_dim];
        for (row, t) in self.basis.row_iter().zip(coords) {
            if t.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *o += &(b * t);
                }
            }
        }
        Ok(out)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        let mut e = SparseEchelon::new(self.field(), self.ambient_dim);
        for row in self.basis.row_iter().chain(other.basis.row_iter()) {
            e.insert(sparse(row));
        }
        Ok(Self::from_echelon(e))
    }

    /// Linear equations cutting out the subspace: rows `c` with `c·v = 0` for
    /// exactly the members `v`.
    pub fn equations(&self) -> Vec<SparseRow> {
        let mut e = SparseEchelon::new(self.field(), self.ambient_dim);
        for row in self.basis.row_iter() {
            e.insert(sparse(row));
        }
        e.into_kernel()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        let mut e = SparseEchelon::new(self.field(), self.ambient_dim);
        for eq in self.equations().into_iter().chain(other.equations()) {
            e.insert(eq);
        }
        Ok(Self::from_sparse_rows(self.field(), self.ambient_dim, e.into_kernel()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.compatible(other)?;
        for row in self.basis.row_iter() {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
