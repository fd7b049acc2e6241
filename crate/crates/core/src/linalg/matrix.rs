use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

use super::echelon::SparseEchelon;
use super::subspace::Subspace;

/// Dense matrix with entries in a single field, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        if let Some(bad) = entries.iter().find(|e| e.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Self {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let mut entries = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::new(field, r, cols, entries)
    }

    /// Convenience constructor from integer rows.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, cols, rows)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "entry from a different field");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        check_field(self.field, v)?;
        Ok(self.row_iter().map(|row| dot(self.field, row, v)).collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.entries[i * 2 * n + j] = self.get(i, j).clone();
            }
            aug.entries[i * 2 * n + n + i] = self.field.one();
        }
        let (r, _) = rref(&aug);
        if (0..n).any(|i| !r.get(i, i).is_one()) {
            return Ok(None);
        }
        let entries = (0..n).flat_map(|i| r.row(i)[n..].to_vec()).collect();
        Ok(Some(Matrix::new(self.field, n, n, entries)?))
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_iter() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub(crate) fn check_field(field: Field, v: &[Scalar]) -> Result<()> {
    match v.iter().find(|e| e.field() != field) {
        Some(bad) => Err(Error::FieldMismatch(field, bad.field())),
        None => Ok(()),
    }
}

pub(crate) fn dot(field: Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// Reduced row echelon form by Gauss–Jordan elimination, with the rank.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.entries.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a.get(r, c).inverse().expect("nonzero pivot");
        for j in c..cols {
            let v = a.get(r, j) * &inv;
            a.entries[r * cols + j] = v;
        }
        for i in 0..rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let factor = a.get(i, c).clone();
            for j in c..cols {
                let delta = a.get(r, j) * &factor;
                if !delta.is_zero() {
                    a.entries[i * cols + j] -= &delta;
                }
            }
        }
        r += 1;
    }
    (a, r)
}

/// Null space `{v : m·v = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let mut e = SparseEchelon::new(m.field, m.cols);
    for row in m.row_iter() {
        e.insert(sparse(row));
    }
    Subspace::from_sparse_rows(m.field, m.cols, e.into_kernel())
}

pub(crate) fn sparse(row: &[Scalar]) -> Vec<(usize, Scalar)> {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

/// Solution set `particular + directions` of a consistent linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpace {
    pub particular: Vec<Scalar>,
    pub directions: Subspace,
}

impl AffineSpace {
    pub fn dim(&self) -> usize {
        self.directions.dim()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.len() != self.particular.len() {
            return false;
        }
        let diff: Vec<Scalar> = v.iter().zip(&self.particular).map(|(a, b)| a - b).collect();
        self.directions.contains(&diff).unwrap_or(false)
    }
}

/// Solves `m·v = b`. Returns `Ok(None)` when the system is infeasible. The
/// particular solution has every free variable set to zero.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<AffineSpace>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch {
            expected: m.rows,
            found: b.len(),
        });
    }
    check_field(m.field, b)?;
    let cols = m.cols;
    let mut e = SparseEchelon::new(m.field, cols + 1);
    for (row, rhs) in m.row_iter().zip(b) {
        let mut r = sparse(row);
        if !rhs.is_zero() {
            r.push((cols, rhs.clone()));
        }
        e.insert(r);
    }
    if e.pivot_columns().any(|c| c == cols) {
        return Ok(None);
    }
    let mut particular = vec![m.field.zero(); cols];
    let mut homogeneous = SparseEchelon::new(m.field, cols);
    for row in e.into_rref() {
        let lead = row[0].0;
        let mut h = Vec::with_capacity(row.len());
        for (c, v) in row {
            if c == cols {
                particular[lead] = v;
            } else {
                h.push((c, v));
            }
        }
        homogeneous.insert(h);
    }
    Ok(Some(AffineSpace {
        particular,
        directions: Subspace::from_sparse_rows(m.field, cols, homogeneous.into_kernel()),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(q(), 2);
        assert_eq!(rref(&id), (id.clone(), 2));
    }

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_i64(q(), &[&[1, 1], &[1, 1]]).unwrap();
        let want = Matrix::from_i64(q(), &[&[1, 1], &[0, 0]]).unwrap();
        assert_eq!(rref(&m), (want, 1));
    }

    #[test]
    fn rref_rank_one_mod_two() {
        let f2 = Field::prime(2).unwrap();
        let m = Matrix::from_i64(f2, &[&[1, 1], &[1, 1]]).unwrap();
        let want = Matrix::from_i64(f2, &[&[1, 1], &[0, 0]]).unwrap();
        assert_eq!(rref(&m), (want, 1));
    }

    #[test]
    fn inverse() {
        let m = Matrix::from_i64(q(), &[&[2, 1], &[1, 1]]).unwrap();
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(inv, Matrix::from_i64(q(), &[&[1, -1], &[-1, 2]]).unwrap());
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(q(), 2));
        let singular = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(singular.inverse().unwrap(), None);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Matrix::identity(q(), 3)).dim(), 0);
        let k = kernel(&Matrix::from_i64(q(), &[&[1, 1]]).unwrap());
        assert_eq!(k, Subspace::span_i64(q(), 2, &[&[1, -1]]).unwrap());
        assert_eq!(kernel(&Matrix::zeros(q(), 2, 3)).dim(), 3);
    }

    #[test]
    fn solve_examples() {
        let b: Vec<Scalar> = [3, -4].iter().map(|&v| q().from_i64(v)).collect();
        let s = solve(&Matrix::identity(q(), 2), &b).unwrap().unwrap();
        assert_eq!(s.particular, b);
        assert_eq!(s.dim(), 0);

        let s = solve(&Matrix::from_i64(q(), &[&[1, 1]]).unwrap(), &[q().from_i64(2)])
            .unwrap()
            .unwrap();
        assert_eq!(s.particular, vec![q().from_i64(2), q().zero()]);
        assert_eq!(s.directions, Subspace::span_i64(q(), 2, &[&[1, -1]]).unwrap());

        let none = solve(&Matrix::from_i64(q(), &[&[0]]).unwrap(), &[q().one()]).unwrap();
        assert!(none.is_none());
    }

    #[test]
    fn solve_rejects_wrong_rhs_length() {
        let m = Matrix::identity(q(), 2);
        assert!(solve(&m, &[q().one()]).is_err());
    }
}
