use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::zero_vector;
use crate::scalar::{Field, Scalar};

/// Outcome of a decision procedure that produces a witness on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Pass,
    Fail(W),
}

impl<W> Verdict<W> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }
}

/// A bilinear map on `field^n`, stored as the sparse structure-constant
/// tensor: `b_i * b_j = Σ_k c[i][j][k] b_k`.
///
/// No associativity is assumed; candidates produced by the solvers are
/// generic bilinear maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Product {
    field: Field,
    dim: usize,
    /// Indexed by `i * dim + j`; entries sorted by `k`, coefficients nonzero.
    table: Vec<Vec<(usize, Scalar)>>,
}

impl Product {
    pub fn zero(field: Field, dim: usize) -> Self {
        Self {
            field,
            dim,
            table: vec![Vec::new(); dim * dim],
        }
    }

    /// Builds a product from `(i, j, k, c)` entries; repeated triples accumulate.
    pub fn from_entries<I>(field: Field, dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let mut p = Self::zero(field, dim);
        for (i, j, k, c) in entries {
            p.add_entry(i, j, k, &c)?;
        }
        Ok(p)
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_i64(field: Field, dim: usize, entries: &[(usize, usize, usize, i64)]) -> Result<Self> {
        Self::from_entries(
            field,
            dim,
            entries.iter().map(|&(i, j, k, c)| (i, j, k, field.from_i64(c))),
        )
    }

    pub fn add_entry(&mut self, i: usize, j: usize, k: usize, c: &Scalar) -> Result<()> {
        for idx in [i, j, k] {
            if idx >= self.dim {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    dim: self.dim,
                });
            }
        }
        if c.field() != self.field {
            return Err(Error::FieldMismatch(self.field, c.field()));
        }
        if c.is_zero() {
            return Ok(());
        }
        let cell = &mut self.table[i * self.dim + j];
        match cell.binary_search_by_key(&k, |(kk, _)| *kk) {
            Ok(pos) => {
                cell[pos].1 += c;
                if cell[pos].1.is_zero() {
                    cell.remove(pos);
                }
            }
            Err(pos) => cell.insert(pos, (k, c.clone())),
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sparse image of the basis pair `(b_i, b_j)`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Scalar {
        let cell = self.basis_product(i, j);
        match cell.binary_search_by_key(&k, |(kk, _)| *kk) {
            Ok(pos) => cell[pos].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    /// All nonzero `(i, j, k, c)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        self.table.iter().enumerate().flat_map(move |(ij, cell)| {
            let (i, j) = (ij / self.dim, ij % self.dim);
            cell.iter().map(move |(k, c)| (i, j, *k, c))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    fn check_vec(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        if let Some(bad) = v.iter().find(|x| x.field() != self.field) {
            return Err(Error::FieldMismatch(self.field, bad.field()));
        }
        Ok(())
    }

    pub(crate) fn check_same_shape(&self, other: &Product) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// Evaluates the bilinear map on coordinate vectors.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_vec(a)?;
        self.check_vec(b)?;
        Ok(self.mul(a, b))
    }

    /// Unchecked evaluation; callers guarantee shape and field.
    pub(crate) fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vector(self.field, self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &(c * &xy);
                }
            }
        }
        out
    }

    /// `v * b_k` for a dense `v`.
    pub(crate) fn mul_right_basis(&self, v: &[Scalar], k: usize) -> Vec<Scalar> {
        let mut out = zero_vector(self.field, self.dim);
        for (m, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (t, c) in self.basis_product(m, k) {
                out[*t] += &(c * x);
            }
        }
        out
    }

    /// `b_i * v` for a dense `v`.
    pub(crate) fn mul_left_basis(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vector(self.field, self.dim);
        for (m, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (t, c) in self.basis_product(i, m) {
                out[*t] += &(c * x);
            }
        }
        out
    }

    /// Dense image of the basis pair.
    pub(crate) fn basis_product_dense(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = zero_vector(self.field, self.dim);
        for (k, c) in self.basis_product(i, j) {
            out[*k] = c.clone();
        }
        out
    }

    /// Associativity on all basis triples; the witness is the first failing
    /// triple in lexicographic order.
    pub fn is_associative(&self) -> Verdict<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product_dense(i, j);
                for k in 0..n {
                    let left = self.mul_right_basis(&ij, k);
                    let jk = self.basis_product_dense(j, k);
                    let right = self.mul_left_basis(i, &jk);
                    if left != right {
                        return Verdict::Fail((i, j, k));
                    }
                }
            }
        }
        Verdict::Pass
    }

    /// Coefficient-wise sum.
    pub fn sum(&self, other: &Product) -> Result<Product> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (i, j, k, c) in other.entries() {
            out.add_entry(i, j, k, c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<Product> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch(self.field, c.field()));
        }
        let mut out = Product::zero(self.field, self.dim);
        if c.is_zero() {
            return Ok(out);
        }
        for (cell, src) in out.table.iter_mut().zip(&self.table) {
            *cell = src.iter().map(|(k, v)| (*k, v * c)).collect();
        }
        Ok(out)
    }

    pub fn neg(&self) -> Product {
        self.scale(&-self.field.one()).expect("same field")
    }

    /// Flattened coefficients, index `(i * n + j) * n + k`.
    pub fn to_coords(&self) -> Vec<Scalar> {
        let n = self.dim;
        let mut v = zero_vector(self.field, n * n * n);
        for (i, j, k, c) in self.entries() {
            v[(i * n + j) * n + k] = c.clone();
        }
        v
    }

    pub fn from_coords(field: Field, dim: usize, coords: &[Scalar]) -> Result<Product> {
        if coords.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: coords.len(),
            });
        }
        let mut p = Product::zero(field, dim);
        for (idx, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                let (ij, k) = (idx / dim, idx % dim);
                p.add_entry(ij / dim, ij % dim, k, c)?;
            }
        }
        Ok(p)
    }

    /// Image of the product under `(a, b) ↦ f(a * b)` for a linear `f` given
    /// as a closure on dense vectors.
    pub(crate) fn map_values<F>(&self, mut f: F) -> Product
    where
        F: FnMut(&[Scalar]) -> Vec<Scalar>,
    {
        let n = self.dim;
        let mut out = Product::zero(self.field, n);
        for i in 0..n {
            for j in 0..n {
                let v = f(&self.basis_product_dense(i, j));
                out.table[i * n + j] = v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            }
        }
        out
    }

    /// Builds a product from a closure giving the dense image of each basis pair.
    pub(crate) fn from_basis_fn<F>(field: Field, dim: usize, mut f: F) -> Product
    where
        F: FnMut(usize, usize) -> Vec<Scalar>,
    {
        let mut out = Product::zero(field, dim);
        for i in 0..dim {
            for j in 0..dim {
                out.table[i * dim + j] = f(i, j).into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            }
        }
        out
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j, k, c) in self.entries() {
            writeln!(f, "b{i} * b{j} -> {c} b{k}")?;
        }
        Ok(())
    }
}
