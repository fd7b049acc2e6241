use crate::error::{Error, Result};
use crate::linalg::{unit_vector, Matrix};
use crate::scalar::{Field, Scalar};

use super::product::{Product, Verdict};

/// A nonzero finite-dimensional associative algebra with labelled basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    labels: Vec<String>,
    dot: Product,
}

impl Algebra {
    /// Verifies associativity of `dot`.
    pub fn new(labels: Vec<String>, dot: Product) -> Result<Self> {
        let a = Self::new_unchecked(labels, dot)?;
        if let Verdict::Fail((i, j, k)) = a.dot.is_associative() {
            return Err(Error::NonAssociative(i, j, k));
        }
        Ok(a)
    }

    /// Skips the associativity check; shape checks still apply.
    pub fn new_unchecked(labels: Vec<String>, dot: Product) -> Result<Self> {
        if dot.dim() == 0 {
            return Err(Error::ZeroDimension);
        }
        if labels.len() != dot.dim() {
            return Err(Error::DimensionMismatch {
                expected: dot.dim(),
                found: labels.len(),
            });
        }
        Ok(Self { labels, dot })
    }

    /// Basis labelled `e1..en`.
    pub fn with_default_labels(dot: Product) -> Result<Self> {
        let labels = (1..=dot.dim()).map(|i| format!("e{i}")).collect();
        Self::new(labels, dot)
    }

    pub fn dim(&self) -> usize {
        self.dot.dim()
    }

    pub fn field(&self) -> Field {
        self.dot.field()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn dot(&self) -> &Product {
        &self.dot
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vector(self.field(), self.dim(), i)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Pretty form of a vector in terms of basis labels, e.g. `e11 - e12`.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        format_with_labels(&self.labels, v)
    }
}

pub fn format_with_labels(labels: &[String], v: &[Scalar]) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push(' ');
        }
        out.push_str(l);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A linear map on coordinates: `φ(b_c) = Σ_r m[r][c] b_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    matrix: Matrix,
}

impl Endomorphism {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::ShapeMismatch(format!(
                "endomorphism matrix is {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self { matrix })
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Self {
            matrix: Matrix::identity(field, n),
        }
    }

    pub fn scalar(c: &Scalar, n: usize) -> Self {
        let field = c.field();
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        Self { matrix: m }
    }

    /// From the row-major `n²` coordinates used by centroid subspaces.
    pub fn from_coords(field: Field, n: usize, coords: &[Scalar]) -> Result<Self> {
        Ok(Self {
            matrix: Matrix::new(field, n, n, coords.to_vec())?,
        })
    }

    pub fn to_coords(&self) -> Vec<Scalar> {
        self.matrix.entries().to_vec()
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.matrix.mul_vec(v)
    }
}

/// Matrix–vector action of an endomorphism.
pub fn apply_endo(phi: &Endomorphism, v: &[Scalar]) -> Result<Vec<Scalar>> {
    phi.apply(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn zero_dimension_rejected() {
        assert_eq!(Algebra::new(vec![], Product::zero(Q, 0)), Err(Error::ZeroDimension));
    }

    #[test]
    fn non_associative_rejected_unless_unchecked() {
        let p = Product::from_i64(Q, 2, &[(0, 0, 1, 1), (1, 0, 0, 1)]).unwrap();
        let labels = vec!["a".to_string(), "b".to_string()];
        assert_eq!(
            Algebra::new(labels.clone(), p.clone()),
            Err(Error::NonAssociative(0, 0, 0))
        );
        assert!(Algebra::new_unchecked(labels, p).is_ok());
    }

    #[test]
    fn apply_endo_examples() {
        let v: Vec<Scalar> = [1, -2, 3].iter().map(|&x| Q.from_i64(x)).collect();
        assert_eq!(apply_endo(&Endomorphism::identity(Q, 3), &v).unwrap(), v);
        let zero = Endomorphism::scalar(&Q.zero(), 3);
        assert!(apply_endo(&zero, &v).unwrap().iter().all(Scalar::is_zero));
        let three = Endomorphism::scalar(&Q.from_i64(3), 3);
        let want: Vec<Scalar> = [3, -6, 9].iter().map(|&x| Q.from_i64(x)).collect();
        assert_eq!(apply_endo(&three, &v).unwrap(), want);
        assert!(apply_endo(&three, &v[..2]).is_err());
    }

    #[test]
    fn vector_formatting() {
        let labels: Vec<String> = ["e11", "e12", "e21"].iter().map(|s| s.to_string()).collect();
        let v: Vec<Scalar> = [1, -1, 0].iter().map(|&x| Q.from_i64(x)).collect();
        assert_eq!(format_with_labels(&labels, &v), "e11 - e12");
        let w = vec![Q.zero(), Q.from_i64(-2), Q.from_ratio(1, 2).unwrap()];
        assert_eq!(format_with_labels(&labels, &w), "-2 e12 + 1/2 e21");
    }
}
