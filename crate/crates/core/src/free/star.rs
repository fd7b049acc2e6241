use std::collections::BTreeMap;
use std::thread;

use serde::Serialize;

use crate::algebra::Verdict;
use crate::compat::{CompatKind, Identity};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

use super::ncpoly::{validate_vars, NCPoly, Word};
use super::{side_value, Ring};

/// `q = Σ_u u·R_u`, indexed by the letter `u`.
pub fn decompose_right(q: &NCPoly) -> Result<Vec<NCPoly>> {
    if !q.is_augmented() {
        return Err(Error::NonzeroConstantTerm);
    }
    let mut out = vec![q.zero_like(); q.vars().len()];
    for (w, c) in q.terms() {
        out[w.0[0] as usize].push(Word(w.0[1..].to_vec()), c);
    }
    Ok(out)
}

/// `q = Σ_v L_v·v`, indexed by the letter `v`.
pub fn decompose_left(q: &NCPoly) -> Result<Vec<NCPoly>> {
    if !q.is_augmented() {
        return Err(Error::NonzeroConstantTerm);
    }
    let mut out = vec![q.zero_like(); q.vars().len()];
    for (w, c) in q.terms() {
        let (last, init) = w.0.split_last().expect("nonempty word");
        out[*last as usize].push(Word(init.to_vec()), c);
    }
    Ok(out)
}

/// An assignment `X × X → K⟨X⟩⁺`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarMap {
    vars: Vec<char>,
    field: Field,
    /// Indexed by `x * |X| + y`.
    table: Vec<NCPoly>,
}

impl StarMap {
    /// Builds the map from `f(x, y)` on letter indices.
    pub fn from_fn<F>(vars: &[char], field: Field, mut f: F) -> Result<Self>
    where
        F: FnMut(u8, u8) -> Result<NCPoly>,
    {
        validate_vars(vars)?;
        let k = vars.len() as u8;
        let mut table = Vec::with_capacity(vars.len() * vars.len());
        for x in 0..k {
            for y in 0..k {
                let p = f(x, y)?;
                if p.vars() != vars {
                    return Err(Error::AlphabetMismatch(vars.len(), p.vars().len()));
                }
                if p.field() != field {
                    return Err(Error::FieldMismatch(field, p.field()));
                }
                if !p.is_augmented() {
                    return Err(Error::NonzeroConstantTerm);
                }
                table.push(p);
            }
        }
        Ok(Self {
            vars: vars.to_vec(),
            field,
            table,
        })
    }

    /// Table keyed by variable pairs; missing pairs map to zero.
    pub fn from_table(vars: &[char], field: Field, entries: &BTreeMap<(char, char), NCPoly>) -> Result<Self> {
        for &(x, y) in entries.keys() {
            for c in [x, y] {
                if !vars.contains(&c) {
                    return Err(Error::Parse(format!("`{c}` is not a variable")));
                }
            }
        }
        Self::from_fn(vars, field, |x, y| {
            let key = (vars[x as usize], vars[y as usize]);
            match entries.get(&key) {
                Some(p) => Ok(p.clone()),
                None => NCPoly::zero(vars, field),
            }
        })
    }

    /// `x ⋆ y = xy`; extends to the free product itself.
    pub fn concatenation(vars: &[char], field: Field) -> Result<Self> {
        Self::from_fn(vars, field, |x, y| {
            NCPoly::monomial(vars, field, Word(vec![x, y]), field.one())
        })
    }

    /// `x ⋆ y = x`, the left-zero semigroup on `X`.
    pub fn left_zero(vars: &[char], field: Field) -> Result<Self> {
        Self::from_fn(vars, field, |x, _| {
            NCPoly::monomial(vars, field, Word::letter(x), field.one())
        })
    }

    /// `x ⋆ y = x·p·y` for `p ∈ K⟨X⟩`.
    pub fn mutation(p: &NCPoly) -> Result<Self> {
        Self::from_fn(p.vars(), p.field(), |x, y| {
            Ok(p.sandwich(&Word::letter(x), &Word::letter(y)))
        })
    }

    pub fn vars(&self) -> &[char] {
        &self.vars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, x: u8, y: u8) -> &NCPoly {
        &self.table[x as usize * self.vars.len() + y as usize]
    }

    /// `(x, y, x ⋆ y)` in letter order.
    pub fn entries(&self) -> impl Iterator<Item = (char, char, &NCPoly)> {
        let k = self.vars.len();
        self.table
            .iter()
            .enumerate()
            .map(move |(i, p)| (self.vars[i / k], self.vars[i % k], p))
    }

    pub fn max_degree(&self) -> usize {
        self.table.iter().filter_map(NCPoly::degree).max().unwrap_or(0)
    }

    /// `a ∗ b = a₁·(x ⋆ y)·b₁` for nonempty words `a = a₁x`, `b = yb₁`.
    pub(crate) fn star_words(&self, a: &Word, b: &Word) -> NCPoly {
        let (x, a1) = a.0.split_last().expect("nonempty word");
        let (y, b1) = b.0.split_first().expect("nonempty word");
        self.get(*x, *y).sandwich(&Word(a1.to_vec()), &Word(b1.to_vec()))
    }

    /// Bilinear extension to augmentation-zero polynomials.
    pub(crate) fn star_polys(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        let mut out = a.zero_like();
        for (u, c) in a.terms() {
            for (v, d) in b.terms() {
                out.add_scaled(&self.star_words(u, v), &(c * d));
            }
        }
        out
    }
}

/// A failing instance of the star condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarWitness {
    pub x: char,
    pub y: char,
    pub z: char,
    pub lhs: NCPoly,
    pub rhs: NCPoly,
}

/// Checks `Σ_v L_{x,y,v}·(v⋆z) = Σ_u (x⋆u)·R_{y,z,u}` for all `x, y, z`.
pub fn star_condition(sm: &StarMap) -> Verdict<StarWitness> {
    let k = sm.vars.len() as u8;
    for x in 0..k {
        for y in 0..k {
            let left = decompose_left(sm.get(x, y)).expect("star images are augmented");
            for z in 0..k {
                let right = decompose_right(sm.get(y, z)).expect("star images are augmented");
                let mut lhs = left[0].zero_like();
                let mut rhs = lhs.clone();
                for v in 0..k {
                    lhs.add_assign(&left[v as usize].mul_unchecked(sm.get(v, z)));
                }
                for u in 0..k {
                    rhs.add_assign(&sm.get(x, u).mul_unchecked(&right[u as usize]));
                }
                if lhs != rhs {
                    return Verdict::Fail(StarWitness {
                        x: sm.vars[x as usize],
                        y: sm.vars[y as usize],
                        z: sm.vars[z as usize],
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    Verdict::Pass
}

fn require_condition(sm: &StarMap) -> Result<()> {
    match star_condition(sm) {
        Verdict::Pass => Ok(()),
        Verdict::Fail(w) => {
            let idx = |c: char| sm.vars.iter().position(|&v| v == c).expect("letter of the alphabet");
            Err(Error::ConditionNotVerified(idx(w.x), idx(w.y), idx(w.z)))
        }
    }
}

/// The product `a ∗ b` induced on `K⟨X⟩⁺` by a star map satisfying the star condition.
pub fn extend_star(sm: &StarMap, a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
    for p in [a, b] {
        if p.vars() != sm.vars() {
            return Err(Error::AlphabetMismatch(sm.vars.len(), p.vars().len()));
        }
        if p.field() != sm.field {
            return Err(Error::FieldMismatch(sm.field, p.field()));
        }
        if !p.is_augmented() {
            return Err(Error::NonzeroConstantTerm);
        }
    }
    require_condition(sm)?;
    Ok(sm.star_polys(a, b))
}

/// A failing identity instance on words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordWitness {
    pub identity: String,
    pub a: String,
    pub b: String,
    pub c: String,
    pub lhs: String,
    pub rhs: String,
}

impl Ring for NCPoly {
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }
}

/// Nonempty word triples with total length `≤ d`, length-lexicographic in
/// `(a, b, c)`, grouped by `a`.
fn triples_by_first(k: usize, d: usize) -> Vec<(Word, Vec<(Word, Word)>)> {
    if d < 3 {
        return Vec::new();
    }
    Word::up_to(k, d - 2)
        .into_iter()
        .map(|a| {
            let rest: Vec<(Word, Word)> = Word::up_to(k, d - 1 - a.len())
                .into_iter()
                .flat_map(|b| {
                    Word::up_to(k, d - a.len() - b.len())
                        .into_iter()
                        .map(move |c| (b.clone(), c))
                })
                .collect();
            (a, rest)
        })
        .collect()
}

enum WordCheck<'a> {
    Mixed(&'a Identity),
    Associativity,
}

fn first_failure(sm: &StarMap, checks: &[WordCheck<'_>], a: &Word, rest: &[(Word, Word)]) -> Option<WordWitness> {
    let field = sm.field;
    let mono = |w: &Word| NCPoly::monomial(&sm.vars, field, w.clone(), field.one()).expect("valid word");
    let pa = mono(a);
    let star = |p: &NCPoly, q: &NCPoly| sm.star_polys(p, q);
    let dot = |p: &NCPoly, q: &NCPoly| p.mul_unchecked(q);
    for (b, c) in rest {
        let (pb, pc) = (mono(b), mono(c));
        for check in checks {
            let (name, lhs, rhs) = match check {
                WordCheck::Mixed(id) => (
                    id.render(),
                    side_value(id.lhs, &pa, &pb, &pc, &star, &dot),
                    side_value(id.rhs, &pa, &pb, &pc, &star, &dot),
                ),
                WordCheck::Associativity => (
                    "(a*b)*c = a*(b*c)".to_string(),
                    star(&star(&pa, &pb), &pc),
                    star(&pa, &star(&pb, &pc)),
                ),
            };
            if lhs != rhs {
                return Some(WordWitness {
                    identity: name,
                    a: a.render(&sm.vars),
                    b: b.render(&sm.vars),
                    c: c.render(&sm.vars),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }
    None
}

fn run_checks(sm: &StarMap, checks: &[WordCheck<'_>], d: usize, workers: usize) -> Verdict<WordWitness> {
    let groups = triples_by_first(sm.vars.len(), d);
    let found: Option<WordWitness> = if workers <= 1 || groups.len() <= 1 {
        groups.iter().find_map(|(a, rest)| first_failure(sm, checks, a, rest))
    } else {
        let chunk = groups.len().div_ceil(workers);
        thread::scope(|s| {
            let handles: Vec<_> = groups
                .chunks(chunk)
                .map(|block| s.spawn(move || block.iter().find_map(|(a, rest)| first_failure(sm, checks, a, rest))))
                .collect();
            // Chunks are in order, so the first failing chunk holds the first failure.
            handles
                .into_iter()
                .map(|h| h.join().expect("verification worker panicked"))
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .next()
        })
    };
    match found {
        Some(w) => Verdict::Fail(w),
        None => Verdict::Pass,
    }
}

/// [`verify_id_matching_truncated_with`] on a single worker.
pub fn verify_id_matching_truncated(sm: &StarMap, d: usize) -> Result<Verdict<WordWitness>> {
    verify_id_matching_truncated_with(sm, d, 1)
}

/// Checks both id-matching identities and associativity of the extended
/// product on every triple of nonempty words with total length `≤ d`.
/// Arithmetic is exact: no term is ever discarded for exceeding `d`.
pub fn verify_id_matching_truncated_with(sm: &StarMap, d: usize, workers: usize) -> Result<Verdict<WordWitness>> {
    require_condition(sm)?;
    let mut checks: Vec<WordCheck<'_>> = CompatKind::IdMatching
        .identities()
        .iter()
        .map(WordCheck::Mixed)
        .collect();
    checks.push(WordCheck::Associativity);
    Ok(run_checks(sm, &checks, d, workers))
}

/// Identities of `kind` for the extended product of `sm` on word triples of
/// total length `≤ d`. The star condition is not required.
pub fn check_word_identities(sm: &StarMap, kind: CompatKind, d: usize) -> Verdict<WordWitness> {
    let checks: Vec<WordCheck<'_>> = kind.identities().iter().map(WordCheck::Mixed).collect();
    run_checks(sm, &checks, d, 1)
}

/// Scales every image of a star map.
pub fn scale_star(sm: &StarMap, c: &Scalar) -> Result<StarMap> {
    StarMap::from_fn(&sm.vars, sm.field, |x, y| sm.get(x, y).scale(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;
    const XY: [char; 2] = ['x', 'y'];

    fn p(pairs: &[(&str, i64)]) -> NCPoly {
        NCPoly::from_pairs(&XY, Q, pairs.iter().map(|&(w, c)| (w, Q.from_i64(c)))).unwrap()
    }

    #[test]
    fn decompositions() {
        let r = decompose_right(&p(&[("xy", 1), ("x", 1)])).unwrap();
        assert_eq!(r, vec![p(&[("y", 1), ("", 1)]), p(&[])]);
        let l = decompose_left(&p(&[("xy", 1), ("yx", 1)])).unwrap();
        assert_eq!(l, vec![p(&[("y", 1)]), p(&[("x", 1)])]);
        assert_eq!(decompose_right(&p(&[("", 1)])), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn classical_stars_pass() {
        assert!(star_condition(&StarMap::concatenation(&XY, Q).unwrap()).is_pass());
        assert!(star_condition(&StarMap::left_zero(&XY, Q).unwrap()).is_pass());
        let m = StarMap::mutation(&p(&[("xy", 1), ("", 2)])).unwrap();
        assert!(star_condition(&m).is_pass());
    }

    #[test]
    fn square_to_other_letter() {
        // x ⋆ x = y, everything else 0. Hand evaluation: for (x,x,x),
        // L_{x,x,y} = 1 so lhs = y ⋆ x = 0; R_{x,x,y} = 1 so rhs = x ⋆ y = 0.
        // Every instance collapses to 0 = 0.
        let mut t = BTreeMap::new();
        t.insert(('x', 'x'), p(&[("y", 1)]));
        let sm = StarMap::from_table(&XY, Q, &t).unwrap();
        assert!(star_condition(&sm).is_pass());
    }

    #[test]
    fn failing_star() {
        // (x,x,y): lhs = L_{x,x,y}·(y ⋆ y) = 0, rhs = (x ⋆ y)·R_{x,y,x} = xx·x.
        let mut t = BTreeMap::new();
        t.insert(('x', 'y'), p(&[("xx", 1)]));
        t.insert(('x', 'x'), p(&[("y", 1)]));
        let sm = StarMap::from_table(&XY, Q, &t).unwrap();
        let Verdict::Fail(w) = star_condition(&sm) else {
            panic!("expected failure");
        };
        assert_ne!(w.lhs, w.rhs);
        assert!(extend_star(&sm, &p(&[("x", 1)]), &p(&[("x", 1)])).is_err());
    }

    #[test]
    fn extension_examples() {
        let c = StarMap::concatenation(&XY, Q).unwrap();
        let a = p(&[("xy", 1), ("y", 2)]);
        let b = p(&[("yx", 1)]);
        assert_eq!(extend_star(&c, &a, &b).unwrap(), a.mul(&b).unwrap());

        let lz = StarMap::left_zero(&XY, Q).unwrap();
        assert_eq!(
            extend_star(&lz, &p(&[("yx", 1)]), &p(&[("yx", 1)])).unwrap(),
            p(&[("yxx", 1)])
        );

        let m = StarMap::mutation(&p(&[("xy", 1)])).unwrap();
        assert_eq!(
            extend_star(&m, &p(&[("x", 1)]), &p(&[("y", 1)])).unwrap(),
            p(&[("xxyy", 1)])
        );
        assert_eq!(extend_star(&c, &p(&[("", 1)]), &b), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn truncated_verification() {
        let c = StarMap::concatenation(&XY, Q).unwrap();
        assert!(verify_id_matching_truncated(&c, 4).unwrap().is_pass());
        let lz = StarMap::left_zero(&XY, Q).unwrap();
        assert!(verify_id_matching_truncated(&lz, 4).unwrap().is_pass());
        let m = StarMap::mutation(&p(&[("xy", 1)])).unwrap();
        assert!(verify_id_matching_truncated(&m, 5).unwrap().is_pass());
    }

    #[test]
    fn worker_split_agrees() {
        let m = StarMap::mutation(&p(&[("xy", 1), ("y", -1)])).unwrap();
        for kind in CompatKind::ALL {
            let one = check_word_identities(&m, kind, 5);
            let checks: Vec<WordCheck<'_>> = kind.identities().iter().map(WordCheck::Mixed).collect();
            assert_eq!(one, run_checks(&m, &checks, 5, 4), "{kind}");
        }
    }

    #[test]
    fn left_zero_is_not_totally_compatible() {
        let lz = StarMap::left_zero(&XY, Q).unwrap();
        let Verdict::Fail(w) = check_word_identities(&lz, CompatKind::TotallyCompatible, 3) else {
            panic!("left-zero star is not totally compatible");
        };
        assert_eq!((w.a.as_str(), w.b.as_str(), w.c.as_str()), ("x", "x", "y"));
    }
}
