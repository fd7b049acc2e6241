use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{SparseEchelon, SparseRow, Subspace};
use crate::scalar::{Field, Scalar};

use super::cpoly::Monomial;
use super::ncpoly::{validate_vars, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FreeKind {
    #[serde(rename = "nc")]
    NonCommutative,
    #[serde(rename = "commutative")]
    Commutative,
}

impl std::str::FromStr for FreeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nc" | "noncommutative" => Ok(FreeKind::NonCommutative),
            "commutative" | "c" => Ok(FreeKind::Commutative),
            _ => Err(Error::Parse(format!("unknown algebra kind `{s}`"))),
        }
    }
}

impl std::fmt::Display for FreeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FreeKind::NonCommutative => "nc",
            FreeKind::Commutative => "commutative",
        })
    }
}

/// Basis elements of a free (commutative or not) non-unital algebra.
trait FreeBasis: Ord + Clone {
    fn times(&self, other: &Self) -> Self;
    fn deg(&self) -> usize;
    fn up_to(k: usize, max: usize) -> Vec<Self>;
}

impl FreeBasis for Word {
    fn times(&self, other: &Self) -> Self {
        self.concat(other)
    }

    fn deg(&self) -> usize {
        self.len()
    }

    fn up_to(k: usize, max: usize) -> Vec<Self> {
        Word::up_to(k, max)
    }
}

impl FreeBasis for Monomial {
    fn times(&self, other: &Self) -> Self {
        Monomial::times(self, other)
    }

    fn deg(&self) -> usize {
        self.degree() as usize
    }

    fn up_to(k: usize, max: usize) -> Vec<Self> {
        Monomial::up_to(k, max as u32)
    }
}

fn centroid_space<B: FreeBasis>(k: usize, d: usize) -> Subspace {
    let field = Field::Rationals;
    let domain = B::up_to(k, d);
    let codomain = B::up_to(k, 2 * d - 1);
    let dpos: BTreeMap<&B, usize> = domain.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let width = codomain.len();
    let var = |w: &B, t: usize| dpos[w] * width + t;
    let cols = domain.len() * width;
    let one = field.one();
    let minus = -field.one();
    let mut e = SparseEchelon::new(field, cols);
    for u in &domain {
        for v in &domain {
            if u.deg() + v.deg() > d {
                continue;
            }
            let uv = u.times(v);
            // u·φ(v) − φ(uv) and φ(uv) − φ(u)·v, coordinate by coordinate.
            let mut first: BTreeMap<B, BTreeMap<usize, Scalar>> = BTreeMap::new();
            let mut second: BTreeMap<B, BTreeMap<usize, Scalar>> = BTreeMap::new();
            for (t, w) in codomain.iter().enumerate() {
                add(&mut first, u.times(w), var(v, t), &one);
                add(&mut first, w.clone(), var(&uv, t), &minus);
                add(&mut second, w.clone(), var(&uv, t), &one);
                add(&mut second, w.times(v), var(u, t), &minus);
            }
            for rows in [first, second] {
                for (_, row) in rows {
                    let row: SparseRow = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                    if !row.is_empty() {
                        e.insert(row);
                    }
                }
            }
        }
    }
    Subspace::from_sparse_rows(field, cols, e.into_kernel())
}

fn add<B: Ord>(rows: &mut BTreeMap<B, BTreeMap<usize, Scalar>>, key: B, unknown: usize, c: &Scalar) {
    let e = rows
        .entry(key)
        .or_default()
        .entry(unknown)
        .or_insert_with(|| c.field().zero());
    *e += c;
}

/// Dimension of the space of linear maps `φ` from words (monomials) of
/// degree `1..=d` to the span of words of degree `1..=2d−1` satisfying
/// `x·φ(y) = φ(x·y) = φ(x)·y` for all pairs with `deg x + deg y ≤ d`.
///
/// The codomain bound `2d − 1` is the least one that admits every
/// multiplication map `a ↦ p·a` with `deg p ≤ d − 1` on the whole domain.
pub fn truncated_centroid_dim(kind: FreeKind, vars: &[char], d: usize) -> Result<usize> {
    validate_vars(vars)?;
    if d < 2 {
        return Err(Error::ShapeMismatch(format!("degree cap must be at least 2, got {d}")));
    }
    Ok(match kind {
        FreeKind::NonCommutative => {
            if vars.len() < 2 {
                return Err(Error::WrongVariableCount {
                    expected: "at least 2".into(),
                    found: vars.len(),
                });
            }
            centroid_space::<Word>(vars.len(), d).dim()
        }
        FreeKind::Commutative => centroid_space::<Monomial>(vars.len(), d).dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutative_one_variable_counts_multipliers() {
        for d in 2..=4 {
            assert_eq!(truncated_centroid_dim(FreeKind::Commutative, &['x'], d).unwrap(), d);
        }
    }

    #[test]
    fn noncommutative_is_scalars() {
        assert_eq!(
            truncated_centroid_dim(FreeKind::NonCommutative, &['x', 'y'], 3).unwrap(),
            1
        );
    }

    #[test]
    fn preconditions() {
        assert!(truncated_centroid_dim(FreeKind::NonCommutative, &['x'], 3).is_err());
        assert!(truncated_centroid_dim(FreeKind::Commutative, &['x'], 1).is_err());
    }
}
