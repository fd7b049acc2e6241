#![allow(dead_code)]

use bicompat::algebra::{Algebra, Product};
use bicompat::constructions::{
    direct_sum, example_3dim, example_6dim, ground_field, matrix_algebra, path_algebra, rectangular_band_algebra,
    transport, zero_algebra, BandSpec, QuiverSpec,
};
use bicompat::linalg::Matrix;
use bicompat::{Field, Scalar};
use proptest::prelude::*;

pub fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rationals),
        Just(Field::Prime(2)),
        Just(Field::Prime(3)),
        Just(Field::Prime(5)),
    ]
}

pub fn scalar(field: Field) -> impl Strategy<Value = Scalar> {
    (-3i64..=3).prop_map(move |v| field.from_i64(v))
}

pub fn vector(field: Field, n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(scalar(field), n)
}

fn small(field: Field, n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec((-1i64..=1).prop_map(move |v| field.from_i64(v)), n)
}

/// `L·U` with unit diagonals, hence invertible.
pub fn invertible(field: Field, n: usize) -> impl Strategy<Value = Matrix> {
    (small(field, n * n), small(field, n * n)).prop_map(move |(l, u)| {
        let tri = |v: &[Scalar], lower: bool| {
            let mut m = Matrix::identity(field, n);
            for i in 0..n {
                for j in 0..n {
                    if (lower && j < i) || (!lower && j > i) {
                        m.set(i, j, v[i * n + j].clone());
                    }
                }
            }
            m
        };
        tri(&l, true).mul(&tri(&u, false)).unwrap()
    })
}

/// Small associative algebras of dimension at most 6.
pub fn base_algebra(field: Field) -> impl Strategy<Value = Algebra> {
    (0usize..10, 1usize..=3, 1usize..=2).prop_map(move |(which, a, b)| {
        let k = || ground_field(field).unwrap();
        match which {
            0 => rectangular_band_algebra(BandSpec::new(a, b).unwrap(), field).unwrap(),
            1 => rectangular_band_algebra(BandSpec::new(b, a).unwrap(), field).unwrap(),
            2 => matrix_algebra(b, field).unwrap(),
            3 => zero_algebra(a, field).unwrap(),
            4 => path_algebra(&QuiverSpec::linear(a), field).unwrap(),
            5 => example_3dim(field).unwrap().0,
            6 => example_6dim(field).unwrap().0,
            7 => direct_sum(&vec![k(); a]).unwrap(),
            8 => direct_sum(&[matrix_algebra(1, field).unwrap(), zero_algebra(b, field).unwrap()]).unwrap(),
            _ => path_algebra(
                &QuiverSpec {
                    vertices: 2,
                    arrows: vec![(0, 1); a],
                },
                field,
            )
            .unwrap(),
        }
    })
}

/// A base algebra, written in a random basis when its dimension is at most 4
/// (dense tables make the larger solves slow).
pub fn algebra(field: Field) -> impl Strategy<Value = Product> {
    base_algebra(field).prop_flat_map(move |a| {
        let n = a.dim();
        let dot = a.dot().clone();
        invertible(field, n).prop_map(move |m| {
            if n <= 4 {
                transport(&dot, &m).unwrap()
            } else {
                dot.clone()
            }
        })
    })
}

pub fn algebra_any_field() -> impl Strategy<Value = Product> {
    fields().prop_flat_map(algebra)
}

/// An arbitrary bilinear product with small coefficients, mostly zero.
pub fn bilinear(field: Field, n: usize) -> impl Strategy<Value = Product> {
    proptest::collection::vec((0..n, 0..n, 0..n, scalar(field)), 0..=2 * n)
        .prop_map(move |entries| Product::from_entries(field, n, entries).unwrap())
}
