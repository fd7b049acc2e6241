//! Incremental row reduction over sparse rows.
//!
//! Identity systems produce many thousands of short rows with a few hundred
//! columns; inserting them one at a time against a growing echelon basis
//! keeps memory proportional to the rank rather than to the row count.

use std::collections::BTreeMap;

use crate::scalar::{Field, Scalar};

/// A sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct SparseEchelon {
    field: Field,
    cols: usize,
    /// Rows keyed by their leading column; leading coefficient is 1 and all
    /// other entries lie to the right of it.
    pivots: BTreeMap<usize, SparseRow>,
}

impl SparseEchelon {
    pub fn new(field: Field, cols: usize) -> Self {
        Self {
            field,
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduces `row` against the current basis and keeps the remainder if it
    /// is nonzero. Returns whether the rank grew.
    pub fn insert<I>(&mut self, row: I) -> bool
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut work: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, v) in row {
            debug_assert!(c < self.cols);
            if v.is_zero() {
                continue;
            }
            match work.get_mut(&c) {
                Some(e) => {
                    *e += &v;
                    if e.is_zero() {
                        work.remove(&c);
                    }
                }
                None => {
                    work.insert(c, v);
                }
            }
        }
        self.reduce(&mut work);
        let Some((&lead, _)) = work.iter().next() else {
            return false;
        };
        let inv = work[&lead].inverse().expect("nonzero leading entry");
        let row: SparseRow = work.into_iter().map(|(c, v)| (c, &v * &inv)).collect();
        self.pivots.insert(lead, row);
        true
    }

    /// Eliminates every pivot column from `work`, scanning left to right.
    fn reduce(&self, work: &mut BTreeMap<usize, Scalar>) {
        let mut cursor = 0;
        loop {
            let next = work
                .range(cursor..)
                .map(|(c, _)| *c)
                .find(|c| self.pivots.contains_key(c));
            let Some(c) = next else { break };
            let factor = work.remove(&c).expect("present");
            for (j, v) in self.pivots[&c].iter().skip(1) {
                let delta = v * &factor;
                match work.get_mut(j) {
                    Some(e) => {
                        *e -= &delta;
                        if e.is_zero() {
                            work.remove(j);
                        }
                    }
                    None => {
                        work.insert(*j, -delta);
                    }
                }
            }
            cursor = c + 1;
        }
    }

    /// Whether `row` already lies in the row space.
    pub fn contains(&self, row: &[(usize, Scalar)]) -> bool {
        let mut work: BTreeMap<usize, Scalar> = row.iter().filter(|(_, v)| !v.is_zero()).cloned().collect();
        self.reduce(&mut work);
        work.is_empty()
    }

    /// Back-substitutes to the reduced row echelon form; rows are returned in
    /// increasing pivot order.
    pub fn into_rref(mut self) -> Vec<SparseRow> {
        let cols: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for &c in &cols {
            let row = self.pivots.remove(&c).expect("present");
            let mut work: BTreeMap<usize, Scalar> = row.into_iter().skip(1).collect();
            // Rows with larger pivots are already reduced, so one pass suffices.
            self.reduce_against_reduced(&mut work, c);
            let mut out = vec![(c, self.field.one())];
            out.extend(work);
            self.pivots.insert(c, out);
        }
        self.pivots.into_values().collect()
    }

    fn reduce_against_reduced(&self, work: &mut BTreeMap<usize, Scalar>, own: usize) {
        let targets: Vec<usize> = work
            .keys()
            .copied()
            .filter(|j| *j != own && self.pivots.contains_key(j))
            .collect();
        for j in targets {
            let Some(factor) = work.remove(&j) else { continue };
            for (k, v) in self.pivots[&j].iter().skip(1) {
                let delta = v * &factor;
                match work.get_mut(k) {
                    Some(e) => {
                        *e -= &delta;
                        if e.is_zero() {
                            work.remove(k);
                        }
                    }
                    None => {
                        work.insert(*k, -delta);
                    }
                }
            }
        }
    }

    /// Basis of the null space `{v : r·v = 0 for every row r}`, one vector per
    /// free column, as sparse rows.
    pub fn into_kernel(self) -> Vec<SparseRow> {
        let field = self.field;
        let cols = self.cols;
        let rref = self.into_rref();
        let pivot_of: BTreeMap<usize, &SparseRow> = rref.iter().map(|r| (r[0].0, r)).collect();
        let mut by_free: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
        for (p, row) in &pivot_of {
            for (j, v) in row.iter().skip(1) {
                by_free.entry(*j).or_default().push((*p, -v));
            }
        }
        (0..cols)
            .filter(|c| !pivot_of.contains_key(c))
            .map(|f| {
                let mut v = by_free.remove(&f).unwrap_or_default();
                v.push((f, field.one()));
                v.sort_by_key(|(c, _)| *c);
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Field::Rationals.from_i64(v)
    }

    #[test]
    fn dependent_rows_do_not_raise_rank() {
        let mut e = SparseEchelon::new(Field::Rationals, 3);
        assert!(e.insert(vec![(0, q(1)), (1, q(2))]));
        assert!(e.insert(vec![(1, q(1)), (2, q(1))]));
        assert!(!e.insert(vec![(0, q(2)), (1, q(5)), (2, q(1))]));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn rref_is_fully_reduced() {
        let mut e = SparseEchelon::new(Field::Rationals, 3);
        e.insert(vec![(0, q(1)), (1, q(2))]);
        e.insert(vec![(1, q(1)), (2, q(1))]);
        let r = e.into_rref();
        assert_eq!(r[0], vec![(0, q(1)), (2, q(-2))]);
        assert_eq!(r[1], vec![(1, q(1)), (2, q(1))]);
    }

    #[test]
    fn kernel_of_single_equation() {
        let mut e = SparseEchelon::new(Field::Rationals, 2);
        e.insert(vec![(0, q(1)), (1, q(1))]);
        assert_eq!(e.into_kernel(), vec![vec![(0, q(-1)), (1, q(1))]]);
    }
}
