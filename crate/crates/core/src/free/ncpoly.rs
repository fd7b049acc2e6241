use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A word over an alphabet, as letter indices. Ordered length-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(x: u8) -> Self {
        Word(vec![x])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// All words of length exactly `len` over `k` letters, in lexicographic order.
    pub fn all_of_length(k: usize, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..k as u8).map(move |x| {
                        let mut v = w.0.clone();
                        v.push(x);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }

    /// Nonempty words of length `1..=max_len`, length-lexicographic.
    pub fn up_to(k: usize, max_len: usize) -> Vec<Word> {
        (1..=max_len).flat_map(|l| Word::all_of_length(k, l)).collect()
    }

    pub fn render(&self, vars: &[char]) -> String {
        self.0.iter().map(|&x| vars[x as usize]).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Checks that an alphabet is nonempty, has distinct letters and fits in a byte.
pub(crate) fn validate_vars(vars: &[char]) -> Result<()> {
    if vars.is_empty() || vars.len() > 64 {
        return Err(Error::Parse(format!(
            "alphabet must have 1..=64 letters, got {}",
            vars.len()
        )));
    }
    for (i, c) in vars.iter().enumerate() {
        if vars[..i].contains(c) {
            return Err(Error::Parse(format!("repeated variable `{c}`")));
        }
    }
    Ok(())
}

/// A noncommutative polynomial over a finite ordered alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NCPoly {
    vars: Vec<char>,
    field: Field,
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero(vars: &[char], field: Field) -> Result<Self> {
        validate_vars(vars)?;
        Ok(Self {
            vars: vars.to_vec(),
            field,
            terms: BTreeMap::new(),
        })
    }

    pub(crate) fn zero_like(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            field: self.field,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(vars: &[char], field: Field, word: Word, c: Scalar) -> Result<Self> {
        let mut p = Self::zero(vars, field)?;
        p.add_term(word, &c)?;
        Ok(p)
    }

    pub fn constant(vars: &[char], c: Scalar) -> Result<Self> {
        Self::monomial(vars, c.field(), Word::empty(), c)
    }

    /// The variable named `x`.
    pub fn var(vars: &[char], field: Field, x: char) -> Result<Self> {
        let w = Self::parse_word(vars, &x.to_string())?;
        Self::monomial(vars, field, w, field.one())
    }

    /// Parses a word written as a string of variable names; `""` is the empty word.
    pub fn parse_word(vars: &[char], s: &str) -> Result<Word> {
        s.chars()
            .map(|c| {
                vars.iter()
                    .position(|&v| v == c)
                    .map(|i| i as u8)
                    .ok_or_else(|| Error::Parse(format!("`{c}` is not a variable")))
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }

    /// Builds a polynomial from `(word string, coefficient)` pairs.
    pub fn from_pairs<'a, I>(vars: &[char], field: Field, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, Scalar)>,
    {
        let mut p = Self::zero(vars, field)?;
        for (w, c) in pairs {
            let word = Self::parse_word(vars, w)?;
            p.add_term(word, &c)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, word: Word, c: &Scalar) -> Result<()> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch(self.field, c.field()));
        }
        if let Some(&bad) = word.0.iter().find(|&&x| x as usize >= self.vars.len()) {
            return Err(Error::IndexOutOfRange {
                index: bad as usize,
                dim: self.vars.len(),
            });
        }
        self.push(word, c);
        Ok(())
    }

    /// Unchecked accumulation; drops cancelled terms.
    pub(crate) fn push(&mut self, word: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, c.clone());
            }
        }
    }

    pub fn vars(&self) -> &[char] {
        &self.vars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// Whether the constant term is zero, i.e. the polynomial lies in `K⟨X⟩⁺`.
    pub fn is_augmented(&self) -> bool {
        !self.terms.contains_key(&Word::empty())
    }

    pub(crate) fn same_ring(&self, other: &NCPoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::AlphabetMismatch(self.vars.len(), other.vars.len()));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn add(&self, other: &NCPoly) -> Result<NCPoly> {
        self.same_ring(other)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    pub fn sub(&self, other: &NCPoly) -> Result<NCPoly> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.push(w.clone(), &-c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &NCPoly) -> Result<NCPoly> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn scale(&self, c: &Scalar) -> Result<NCPoly> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch(self.field, c.field()));
        }
        let mut out = self.zero_like();
        for (w, v) in &self.terms {
            out.push(w.clone(), &(v * c));
        }
        Ok(out)
    }

    pub(crate) fn add_assign(&mut self, other: &NCPoly) {
        for (w, c) in &other.terms {
            self.push(w.clone(), c);
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &NCPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, v) in &other.terms {
            self.push(w.clone(), &(v * c));
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.zero_like();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.push(u.concat(v), &(a * b));
            }
        }
        out
    }

    /// `left · self · right` for words.
    pub(crate) fn sandwich(&self, left: &Word, right: &Word) -> NCPoly {
        let mut out = self.zero_like();
        for (w, c) in &self.terms {
            out.push(left.concat(w).concat(right), c);
        }
        out
    }
}

/// Free-algebra product (concatenation, extended bilinearly).
pub fn nc_mul(p: &NCPoly, q: &NCPoly) -> Result<NCPoly> {
    p.mul(q)
}

pub fn nc_add(p: &NCPoly, q: &NCPoly) -> Result<NCPoly> {
    p.add(q)
}

pub fn nc_degree(p: &NCPoly) -> Option<usize> {
    p.degree()
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&w.render(&self.vars))?;
            } else {
                write!(f, "{mag} {}", w.render(&self.vars))?;
            }
        }
        Ok(())
    }
}
