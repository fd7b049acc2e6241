//! Builders for the algebras and product families used throughout the
//! crate: rectangular bands, matrix algebras, path algebras, direct sums,
//! zero algebras, mutations, centroid-determined products and the small
//! nilpotent examples that separate the compatibility notions.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::algebra::{annihilator, centroid, Algebra, Endomorphism, Product};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};

/// Shape `|I| × |J|` of a rectangular band; both sides positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BandSpec {
    pub rows: usize,
    pub cols: usize,
}

impl BandSpec {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ShapeMismatch(format!(
                "band needs positive sides, got {rows}x{cols}"
            )));
        }
        Ok(Self { rows, cols })
    }

    pub fn dim(&self) -> usize {
        self.rows * self.cols
    }

    /// Basis index of `e_ij` (0-based `i`, `j`).
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.cols + j
    }

    pub fn label(&self, i: usize, j: usize) -> String {
        if self.rows < 10 && self.cols < 10 {
            format!("e{}{}", i + 1, j + 1)
        } else {
            format!("e{}_{}", i + 1, j + 1)
        }
    }
}

/// A finite quiver given by vertex count and arrows `(source, target)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
}

impl QuiverSpec {
    /// Linearly oriented `A_n`: `0 → 1 → … → n-1`.
    pub fn linear(n: usize) -> Self {
        Self {
            vertices: n,
            arrows: (1..n).map(|v| (v - 1, v)).collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.vertices == 0 {
            return Err(Error::ZeroDimension);
        }
        for &(s, t) in &self.arrows {
            for v in [s, t] {
                if v >= self.vertices {
                    return Err(Error::IndexOutOfRange {
                        index: v,
                        dim: self.vertices,
                    });
                }
            }
        }
        // Kahn's algorithm; leftover vertices sit on a cycle.
        let mut indeg = vec![0usize; self.vertices];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut queue: VecDeque<usize> = (0..self.vertices).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        queue.push_back(t);
                    }
                }
            }
        }
        if seen != self.vertices {
            return Err(Error::CyclicQuiver);
        }
        Ok(())
    }
}

fn labels_from(it: impl IntoIterator<Item = String>) -> Vec<String> {
    it.into_iter().collect()
}

/// Semigroup algebra of the rectangular band: `e_ij · e_kl = e_il`.
pub fn rectangular_band_algebra(spec: BandSpec, field: Field) -> Result<Algebra> {
    let spec = BandSpec::new(spec.rows, spec.cols)?;
    let mut entries = Vec::new();
    for i in 0..spec.rows {
        for j in 0..spec.cols {
            for k in 0..spec.rows {
                for l in 0..spec.cols {
                    entries.push((spec.index(i, j), spec.index(k, l), spec.index(i, l), field.one()));
                }
            }
        }
    }
    let dot = Product::from_entries(field, spec.dim(), entries)?;
    let labels = labels_from((0..spec.rows).flat_map(|i| (0..spec.cols).map(move |j| spec.label(i, j))));
    Algebra::new(labels, dot)
}

/// Full matrix algebra `M_n` on matrix units `E_ij`, row-major.
pub fn matrix_algebra(n: usize, field: Field) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let idx = |i: usize, j: usize| i * n + j;
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                entries.push((idx(i, j), idx(j, l), idx(i, l), field.one()));
            }
        }
    }
    let dot = Product::from_entries(field, n * n, entries)?;
    let labels = labels_from((0..n).flat_map(|i| {
        (0..n).map(move |j| {
            if n < 10 {
                format!("E{}{}", i + 1, j + 1)
            } else {
                format!("E{}_{}", i + 1, j + 1)
            }
        })
    }));
    Algebra::new(labels, dot)
}

/// Algebra with identically zero multiplication.
pub fn zero_algebra(n: usize, field: Field) -> Result<Algebra> {
    Algebra::new_unchecked((1..=n).map(|i| format!("e{i}")).collect(), Product::zero(field, n))
}

/// Block-diagonal direct sum; labels are prefixed with the summand number.
pub fn direct_sum(parts: &[Algebra]) -> Result<Algebra> {
    let Some(first) = parts.first() else {
        return Err(Error::ZeroDimension);
    };
    let field = first.field();
    let dim: usize = parts.iter().map(Algebra::dim).sum();
    let mut dot = Product::zero(field, dim);
    let mut labels = Vec::with_capacity(dim);
    let mut offset = 0;
    for (s, a) in parts.iter().enumerate() {
        if a.field() != field {
            return Err(Error::FieldMismatch(field, a.field()));
        }
        for (i, j, k, c) in a.dot().entries() {
            dot.add_entry(offset + i, offset + j, offset + k, c)?;
        }
        labels.extend(a.labels().iter().map(|l| format!("{}.{l}", s + 1)));
        offset += a.dim();
    }
    Algebra::new(labels, dot)
}

/// One-dimensional unital algebra `K`.
pub fn ground_field(field: Field) -> Result<Algebra> {
    Algebra::new(
        vec!["1".into()],
        Product::from_entries(field, 1, [(0, 0, 0, field.one())])?,
    )
}

/// A path of the quiver: start vertex and arrow indices (empty for trivial paths).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Path {
    source: usize,
    arrows: Vec<usize>,
}

/// Path algebra of an acyclic quiver. Basis: trivial paths by vertex, then
/// nontrivial paths ordered by length and arrow sequence. Multiplication
/// concatenates `p·q` when `p` ends where `q` starts and is zero otherwise.
pub fn path_algebra(spec: &QuiverSpec, field: Field) -> Result<Algebra> {
    spec.validate()?;
    let target = |p: &Path| p.arrows.last().map_or(p.source, |&a| spec.arrows[a].1);
    let mut paths: Vec<Path> = (0..spec.vertices)
        .map(|v| Path {
            source: v,
            arrows: vec![],
        })
        .collect();
    let mut frontier: Vec<Path> = (0..spec.arrows.len())
        .map(|a| Path {
            source: spec.arrows[a].0,
            arrows: vec![a],
        })
        .collect();
    while !frontier.is_empty() {
        frontier.sort_by(|a, b| a.arrows.cmp(&b.arrows));
        let mut next = Vec::new();
        for p in &frontier {
            let t = target(p);
            for (a, &(s, _)) in spec.arrows.iter().enumerate() {
                if s == t {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path {
                        source: p.source,
                        arrows,
                    });
                }
            }
        }
        paths.append(&mut frontier);
        frontier = next;
    }
    let index: BTreeMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let n = paths.len();
    let mut dot = Product::zero(field, n);
    for (i, p) in paths.iter().enumerate() {
        for (j, q) in paths.iter().enumerate() {
            if target(p) != q.source {
                continue;
            }
            let mut arrows = p.arrows.clone();
            arrows.extend(&q.arrows);
            let pq = Path {
                source: p.source,
                arrows,
            };
            let k = index[&pq];
            dot.add_entry(i, j, k, &field.one())?;
        }
    }
    let labels = paths
        .iter()
        .map(|p| {
            if p.arrows.is_empty() {
                format!("e{}", p.source + 1)
            } else {
                p.arrows
                    .iter()
                    .map(|a| format!("a{}", a + 1))
                    .collect::<Vec<_>>()
                    .join("")
            }
        })
        .collect();
    Algebra::new(labels, dot)
}

/// Mutation `a ·_x b = a·x·b`.
pub fn mutation(dot: &Product, x: &[Scalar]) -> Result<Product> {
    if x.len() != dot.dim() {
        return Err(Error::DimensionMismatch {
            expected: dot.dim(),
            found: x.len(),
        });
    }
    if let Some(bad) = x.iter().find(|c| c.field() != dot.field()) {
        return Err(Error::FieldMismatch(dot.field(), bad.field()));
    }
    Ok(Product::from_basis_fn(dot.field(), dot.dim(), |i, j| {
        let bx = dot.mul_left_basis(i, x);
        dot.mul_right_basis(&bx, j)
    }))
}

/// `a *_φ b = φ(a·b)` for `φ` in the centroid of `dot`.
pub fn centroid_product(dot: &Product, phi: &Endomorphism) -> Result<Product> {
    if phi.dim() != dot.dim() {
        return Err(Error::DimensionMismatch {
            expected: dot.dim(),
            found: phi.dim(),
        });
    }
    if !centroid(dot).contains(&phi.to_coords())? {
        return Err(Error::NotInCentroid);
    }
    Ok(dot.map_values(|v| phi.apply(v).expect("shape checked")))
}

/// The same product written in a new basis: column `i` of `basis` holds the
/// old coordinates of the new `i`-th basis vector.
pub fn transport(dot: &Product, basis: &Matrix) -> Result<Product> {
    let n = dot.dim();
    if basis.rows() != n || basis.cols() != n {
        return Err(Error::ShapeMismatch(format!(
            "change of basis must be {n}x{n}, got {}x{}",
            basis.rows(),
            basis.cols()
        )));
    }
    if basis.field() != dot.field() {
        return Err(Error::FieldMismatch(dot.field(), basis.field()));
    }
    let inv = basis
        .inverse()?
        .ok_or_else(|| Error::ShapeMismatch("change of basis is singular".into()))?;
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|j| (0..n).map(|i| basis.get(i, j).clone()).collect())
        .collect();
    Ok(Product::from_basis_fn(dot.field(), n, |i, j| {
        inv.mul_vec(&dot.mul(&cols[i], &cols[j])).expect("square of size n")
    }))
}

/// `e_ij ∗ e_kl = λ_jk e_il` with `λ` a `|J| × |I|` grid indexed `(j, k)`.
pub fn band_id_matching(spec: BandSpec, lambda: &Matrix) -> Result<Product> {
    if lambda.rows() != spec.cols || lambda.cols() != spec.rows {
        return Err(Error::ShapeMismatch(format!(
            "λ must be {}x{}, got {}x{}",
            spec.cols,
            spec.rows,
            lambda.rows(),
            lambda.cols()
        )));
    }
    let field = lambda.field();
    let mut p = Product::zero(field, spec.dim());
    for i in 0..spec.rows {
        for j in 0..spec.cols {
            for k in 0..spec.rows {
                for l in 0..spec.cols {
                    p.add_entry(spec.index(i, j), spec.index(k, l), spec.index(i, l), lambda.get(j, k))?;
                }
            }
        }
    }
    Ok(p)
}

/// `e_ij ∗ e_kl = λ e_il + r_il` where each `r_il` lies in the annihilator of
/// the band algebra. Missing `(i, l)` keys mean `r_il = 0`. Associativity is
/// not guaranteed.
pub fn band_swap_matching(
    spec: BandSpec,
    lambda: &Scalar,
    r: &BTreeMap<(usize, usize), Vec<Scalar>>,
) -> Result<Product> {
    let field = lambda.field();
    let band = rectangular_band_algebra(spec, field)?;
    let ann = annihilator(band.dot());
    for v in r.values() {
        if !ann.contains(v)? {
            return Err(Error::NotInAnnihilator);
        }
    }
    let mut p = Product::zero(field, spec.dim());
    for i in 0..spec.rows {
        for j in 0..spec.cols {
            for k in 0..spec.rows {
                for l in 0..spec.cols {
                    let (a, b) = (spec.index(i, j), spec.index(k, l));
                    p.add_entry(a, b, spec.index(i, l), lambda)?;
                    if let Some(v) = r.get(&(i, l)) {
                        for (t, c) in v.iter().enumerate() {
                            p.add_entry(a, b, t, c)?;
                        }
                    }
                }
            }
        }
    }
    Ok(p)
}

/// The 3-dimensional nilpotent algebra `e1·e2 = e3`, with `∗` (`e1∗e1 = e1`,
/// `e1∗e2 = e2`) and `⋆` (`e1⋆e1 = e1`, `e1⋆e3 = e3`).
pub fn example_3dim(field: Field) -> Result<(Algebra, Product, Product)> {
    let dot = Product::from_i64(field, 3, &[(0, 1, 2, 1)])?;
    let star = Product::from_i64(field, 3, &[(0, 0, 0, 1), (0, 1, 1, 1)])?;
    let star2 = Product::from_i64(field, 3, &[(0, 0, 0, 1), (0, 2, 2, 1)])?;
    Ok((Algebra::with_default_labels(dot)?, star, star2))
}

/// The 6-dimensional nilpotent algebra `e1·e2 = e4, e1·e5 = e6, e4·e3 = e6,
/// e2·e3 = e5` with `e1∗e2 = e5`, `e1∗e4 = e6`.
pub fn example_6dim(field: Field) -> Result<(Algebra, Product)> {
    let dot = Product::from_i64(field, 6, &[(0, 1, 3, 1), (0, 4, 5, 1), (3, 2, 5, 1), (1, 2, 4, 1)])?;
    let star = Product::from_i64(field, 6, &[(0, 1, 4, 1), (0, 3, 5, 1)])?;
    Ok((Algebra::with_default_labels(dot)?, star))
}

/// The 2×2 band with `e_ij ∗ e_kl = e11 − e12 − e21 + e22` when `(i, l) = (1, 2)`
/// and zero otherwise.
pub fn example_band22(field: Field) -> Result<(Algebra, Product)> {
    let spec = BandSpec::new(2, 2)?;
    let band = rectangular_band_algebra(spec, field)?;
    let r12: Vec<Scalar> = [1, -1, -1, 1].iter().map(|&v| field.from_i64(v)).collect();
    let r = BTreeMap::from([((0, 1), r12)]);
    let star = band_swap_matching(spec, &field.zero(), &r)?;
    Ok((band, star))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{find_units, Side};
    use crate::linalg::{unit_vector, zero_vector};

    const Q: Field = Field::Rationals;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Q.from_i64(x)).collect()
    }

    #[test]
    fn transport_moves_the_unit() {
        let m = matrix_algebra(2, Q).unwrap();
        assert_eq!(transport(m.dot(), &Matrix::identity(Q, 4)).unwrap(), *m.dot());
        let basis = Matrix::from_i64(Q, &[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 2], &[0, 0, 0, 1]]).unwrap();
        let t = transport(m.dot(), &basis).unwrap();
        assert!(t.is_associative().is_pass());
        // The identity E11 + E22 has new coordinates basis⁻¹ · (1, 0, 0, 1).
        let unit = basis.inverse().unwrap().unwrap().mul_vec(&v(&[1, 0, 0, 1])).unwrap();
        assert!(find_units(&t, Side::TwoSided).unwrap().unwrap().contains(&unit));
        let singular = Matrix::zeros(Q, 4, 4);
        assert!(matches!(transport(m.dot(), &singular), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn band_products() {
        let one = rectangular_band_algebra(BandSpec::new(1, 1).unwrap(), Q).unwrap();
        assert_eq!(one.dot().coefficient(0, 0, 0), Q.one());
        let b = rectangular_band_algebra(BandSpec::new(2, 2).unwrap(), Q).unwrap();
        // e12 · e21 = e11
        assert_eq!(b.dot().basis_product(1, 2), &[(0, Q.one())]);
        assert_eq!(b.labels(), &["e11", "e12", "e21", "e22"]);
    }

    #[test]
    fn one_row_band_has_left_units() {
        let b = rectangular_band_algebra(BandSpec::new(1, 3).unwrap(), Q).unwrap();
        for j in 0..3 {
            let e = unit_vector(Q, 3, j);
            for k in 0..3 {
                let x = unit_vector(Q, 3, k);
                assert_eq!(b.dot().multiply(&e, &x).unwrap(), x);
            }
        }
        assert!(find_units(b.dot(), Side::Left).unwrap().is_some());
    }

    #[test]
    fn matrix_units_multiply() {
        let m = matrix_algebra(2, Q).unwrap();
        // E12 · E21 = E11
        assert_eq!(m.dot().basis_product(1, 2), &[(0, Q.one())]);
    }

    #[test]
    fn direct_sum_of_units_is_orthogonal() {
        let k = ground_field(Q).unwrap();
        let s = direct_sum(&[k.clone(), k]).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.dot().basis_product(0, 1).is_empty());
        assert_eq!(s.dot().basis_product(1, 1), &[(1, Q.one())]);
    }

    #[test]
    fn path_algebra_of_a3() {
        let a = path_algebra(&QuiverSpec::linear(3), Q).unwrap();
        assert_eq!(a.dim(), 6);
        assert_eq!(a.labels(), &["e1", "e2", "e3", "a1", "a2", "a1a2"]);
        // a1 · a2 = a1a2 (composite path 1 → 2 → 3), a2 · a1 = 0.
        assert_eq!(a.dot().basis_product(3, 4), &[(5, Q.one())]);
        assert!(a.dot().basis_product(4, 3).is_empty());
    }

    #[test]
    fn cyclic_quiver_rejected() {
        let q = QuiverSpec {
            vertices: 2,
            arrows: vec![(0, 1), (1, 0)],
        };
        assert_eq!(path_algebra(&q, Q), Err(Error::CyclicQuiver));
        let bad = QuiverSpec {
            vertices: 1,
            arrows: vec![(0, 3)],
        };
        assert!(path_algebra(&bad, Q).is_err());
    }

    #[test]
    fn mutation_examples() {
        let m = matrix_algebra(2, Q).unwrap();
        let one = v(&[1, 0, 0, 1]);
        assert_eq!(mutation(m.dot(), &one).unwrap(), *m.dot());
        assert!(mutation(m.dot(), &zero_vector(Q, 4)).unwrap().is_zero());
        let e11 = v(&[1, 0, 0, 0]);
        let mx = mutation(m.dot(), &e11).unwrap();
        // E12 ·_x E11 = E12 E11 E11 = 0; E21 ·_x E12 = E21 E11 E12 = E22.
        assert!(mx.basis_product(1, 0).is_empty());
        assert_eq!(mx.basis_product(2, 1), &[(3, Q.one())]);
    }

    #[test]
    fn centroid_product_examples() {
        let spec = BandSpec::new(2, 2).unwrap();
        let b = rectangular_band_algebra(spec, Q).unwrap();
        let id = Endomorphism::identity(Q, 4);
        assert_eq!(centroid_product(b.dot(), &id).unwrap(), *b.dot());
        let zero = Endomorphism::scalar(&Q.zero(), 4);
        assert!(centroid_product(b.dot(), &zero).unwrap().is_zero());
        let two = Endomorphism::scalar(&Q.from_i64(2), 4);
        let p = centroid_product(b.dot(), &two).unwrap();
        assert_eq!(p, b.dot().scale(&Q.from_i64(2)).unwrap());
        // e12 ∗ e21 = 2 e11
        assert_eq!(p.basis_product(1, 2), &[(0, Q.from_i64(2))]);
    }

    #[test]
    fn centroid_product_rejects_non_centroid_map() {
        let b = rectangular_band_algebra(BandSpec::new(2, 2).unwrap(), Q).unwrap();
        let mut m = Matrix::zeros(Q, 4, 4);
        m.set(0, 1, Q.one());
        let phi = Endomorphism::new(m).unwrap();
        assert_eq!(centroid_product(b.dot(), &phi), Err(Error::NotInCentroid));
    }

    #[test]
    fn band_id_matching_examples() {
        let spec = BandSpec::new(2, 2).unwrap();
        let b = rectangular_band_algebra(spec, Q).unwrap();
        let ones = Matrix::from_i64(Q, &[&[1, 1], &[1, 1]]).unwrap();
        assert_eq!(band_id_matching(spec, &ones).unwrap(), *b.dot());
        assert!(band_id_matching(spec, &Matrix::zeros(Q, 2, 2)).unwrap().is_zero());
        let l = Matrix::from_i64(Q, &[&[1, 0], &[0, 0]]).unwrap();
        let p = band_id_matching(spec, &l).unwrap();
        // e11 ∗ e11 = λ_11 e11 = e11; e12 ∗ e11 = λ_21 e11 = 0.
        assert_eq!(p.basis_product(0, 0), &[(0, Q.one())]);
        assert!(p.basis_product(1, 0).is_empty());
        assert!(band_id_matching(spec, &Matrix::zeros(Q, 1, 2)).is_err());
    }

    #[test]
    fn band_swap_matching_examples() {
        let spec = BandSpec::new(2, 2).unwrap();
        let b = rectangular_band_algebra(spec, Q).unwrap();
        assert_eq!(band_swap_matching(spec, &Q.one(), &BTreeMap::new()).unwrap(), *b.dot());
        let (_, star) = example_band22(Q).unwrap();
        assert!(star.is_associative().is_pass());
        let bad = BTreeMap::from([((0, 0), v(&[1, 0, 0, 0]))]);
        assert_eq!(band_swap_matching(spec, &Q.one(), &bad), Err(Error::NotInAnnihilator));
    }

    #[test]
    fn example_products_are_associative() {
        let (a, s, t) = example_3dim(Q).unwrap();
        assert!(a.dot().is_associative().is_pass());
        assert!(s.is_associative().is_pass());
        assert!(t.is_associative().is_pass());
        // e1 · e2 = e3
        assert_eq!(a.dot().basis_product(0, 1), &[(2, Q.one())]);
        let (b, s6) = example_6dim(Q).unwrap();
        assert!(b.dot().is_associative().is_pass());
        assert!(s6.is_associative().is_pass());
    }
}
