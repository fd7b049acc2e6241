mod common;

use bicompat::linalg::{kernel, rref, solve, Matrix, Subspace};
use bicompat::Field;
use common::{fields, vector};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Matrix> {
    (fields(), 1usize..=5, 1usize..=6)
        .prop_flat_map(|(f, r, c)| vector(f, r * c).prop_map(move |e| Matrix::new(f, r, c, e).unwrap()))
}

proptest! {
    #[test]
    fn rank_nullity(m in matrix()) {
        let (_, rank) = rref(&m);
        let k = kernel(&m);
        prop_assert_eq!(rank + k.dim(), m.cols());
        for v in k.basis_vectors() {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn rref_is_idempotent(m in matrix()) {
        let (r, rank) = rref(&m);
        let (rr, rank2) = rref(&r);
        prop_assert_eq!(rank, rank2);
        prop_assert_eq!(rr, r);
    }

    #[test]
    fn solve_finds_preimages(m in matrix(), seed in any::<u64>()) {
        let f = m.field();
        let x: Vec<_> = (0..m.cols()).map(|i| f.from_i64(((seed >> (i * 3)) % 7) as i64 - 3)).collect();
        let b = m.mul_vec(&x).unwrap();
        let sol = solve(&m, &b).unwrap().expect("b is in the image");
        prop_assert!(sol.contains(&x));
        prop_assert_eq!(m.mul_vec(&sol.particular).unwrap(), b);
    }

    #[test]
    fn sum_and_intersection_dimensions(
        (f, n, a, b) in (fields(), 1usize..=5).prop_flat_map(|(f, n)| {
            (Just(f), Just(n), proptest::collection::vec(vector(f, n), 0..=3), proptest::collection::vec(vector(f, n), 0..=3))
        })
    ) {
        let u = Subspace::span(f, n, &a).unwrap();
        let w = Subspace::span(f, n, &b).unwrap();
        let sum = u.sum(&w).unwrap();
        let cap = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), u.dim() + w.dim());
        prop_assert!(cap.is_subspace_of(&u).unwrap() && cap.is_subspace_of(&w).unwrap());
        prop_assert!(u.is_subspace_of(&sum).unwrap());
        for v in u.basis_vectors() {
            let c = u.coordinates(&v).unwrap().unwrap();
            prop_assert_eq!(u.combine(&c).unwrap(), v);
        }
    }

    #[test]
    fn inverse_of_invertible((f, m) in fields().prop_flat_map(|f| (Just(f), 1usize..=4)).prop_flat_map(|(f, n)| (Just(f), common::invertible(f, n)))) {
        let inv = m.inverse().unwrap().expect("invertible by construction");
        prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f, m.rows()));
    }
}

#[test]
fn kernel_of_zero_map_is_everything() {
    let m = Matrix::zeros(Field::Rationals, 2, 3);
    assert_eq!(kernel(&m), Subspace::full(Field::Rationals, 3));
}
