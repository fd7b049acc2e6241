use std::collections::BTreeMap;

use crate::compat::{CompatKind, Term};
use crate::error::{Error, Result};
use crate::linalg::{SparseEchelon, SparseRow, Subspace};
use crate::scalar::{Field, Scalar};

use super::ncpoly::{validate_vars, NCPoly, Word};
use super::star::StarMap;

/// Linear space of star maps `X × X → span{words of length 1..=d}` whose
/// extended product satisfies a kind's identities on every word triple of
/// total length `≤ d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarSpace {
    pub vars: Vec<char>,
    /// Image words; coordinate `(x * |X| + y) * words.len() + t`.
    pub words: Vec<Word>,
    pub space: Subspace,
}

impl StarSpace {
    pub fn coordinates(&self, sm: &StarMap) -> Result<Vec<Scalar>> {
        if sm.vars() != self.vars.as_slice() {
            return Err(Error::AlphabetMismatch(self.vars.len(), sm.vars().len()));
        }
        let k = self.vars.len() as u8;
        let mut out = Vec::with_capacity(self.space.ambient_dim());
        for x in 0..k {
            for y in 0..k {
                let img = sm.get(x, y);
                if img.degree().unwrap_or(0) > self.words.last().map_or(0, Word::len) {
                    return Err(Error::ShapeMismatch("star image exceeds the degree cap".into()));
                }
                out.extend(self.words.iter().map(|w| img.coefficient(w)));
            }
        }
        Ok(out)
    }

    pub fn star_map(&self, coords: &[Scalar]) -> Result<StarMap> {
        let width = self.words.len();
        let k = self.vars.len();
        if coords.len() != k * k * width {
            return Err(Error::DimensionMismatch {
                expected: k * k * width,
                found: coords.len(),
            });
        }
        let field = self.space.field();
        StarMap::from_fn(&self.vars, field, |x, y| {
            let base = (x as usize * k + y as usize) * width;
            let mut p = NCPoly::zero(&self.vars, field)?;
            for (t, w) in self.words.iter().enumerate() {
                p.add_term(w.clone(), &coords[base + t])?;
            }
            Ok(p)
        })
    }
}

/// `p ∗ q` for words, as `(pair, left, right)` meaning `left·(x ⋆ y)·right`.
fn star_shape(k: usize, p: &Word, q: &Word) -> (usize, Word, Word) {
    let (x, init) = p.0.split_last().expect("nonempty word");
    let (y, tail) = q.0.split_first().expect("nonempty word");
    (*x as usize * k + *y as usize, Word(init.to_vec()), Word(tail.to_vec()))
}

fn term_shape(k: usize, term: Term, a: &Word, b: &Word, c: &Word) -> (usize, Word, Word) {
    match term {
        Term::StarDotLeft => {
            let (s, l, r) = star_shape(k, a, b);
            (s, l, r.concat(c))
        }
        Term::DotStarLeft => star_shape(k, &a.concat(b), c),
        Term::StarDotRight => star_shape(k, a, &b.concat(c)),
        Term::DotStarRight => {
            let (s, l, r) = star_shape(k, b, c);
            (s, a.concat(&l), r)
        }
    }
}

/// Solves for every star map with images of length `≤ d` whose extension
/// satisfies the identities of `kind` on all word triples of total length
/// `≤ d`. For kinds implying id-matching this captures every product of the
/// kind, because such products are determined by their values on letters.
pub fn star_space(kind: CompatKind, vars: &[char], field: Field, d: usize) -> Result<StarSpace> {
    validate_vars(vars)?;
    let k = vars.len();
    let words = Word::up_to(k, d);
    let width = words.len();
    let pos: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let cols = k * k * width;
    let mut e = SparseEchelon::new(field, cols);
    if d >= 3 {
        for a in Word::up_to(k, d - 2) {
            for b in Word::up_to(k, d - 1 - a.len()) {
                for c in Word::up_to(k, d - a.len() - b.len()) {
                    for id in kind.identities() {
                        let mut rows: BTreeMap<Word, BTreeMap<usize, Scalar>> = BTreeMap::new();
                        for (terms, sign) in [(id.lhs, field.one()), (id.rhs, -field.one())] {
                            for &term in terms {
                                let (pair, l, r) = term_shape(k, term, &a, &b, &c);
                                for w in &words {
                                    let slot = rows
                                        .entry(l.concat(w).concat(&r))
                                        .or_default()
                                        .entry(pair * width + pos[w])
                                        .or_insert_with(|| field.zero());
                                    *slot += &sign;
                                }
                            }
                        }
                        for (_, row) in rows {
                            let row: SparseRow = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                            if !row.is_empty() {
                                e.insert(row);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(StarSpace {
        vars: vars.to_vec(),
        words,
        space: Subspace::from_sparse_rows(field, cols, e.into_kernel()),
    })
}
