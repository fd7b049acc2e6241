use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::Verdict;
use crate::compat::CompatKind;
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

use super::ncpoly::validate_vars;
use super::{side_value, Ring};

/// Exponent vector, ordered by total degree and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Monomials of total degree exactly `deg` in `k` variables, in monomial order.
    pub fn all_of_degree(k: usize, deg: u32) -> Vec<Monomial> {
        fn rec(k: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == k {
                prefix.push(deg);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in 0..=deg {
                prefix.push(e);
                rec(k, deg - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(k, deg, &mut Vec::with_capacity(k), &mut out);
        out.sort();
        out
    }

    /// Monomials of degree `1..=max`, in monomial order.
    pub fn up_to(k: usize, max: u32) -> Vec<Monomial> {
        (1..=max).flat_map(|d| Monomial::all_of_degree(k, d)).collect()
    }

    pub fn render(&self, vars: &[char]) -> String {
        let mut s = String::new();
        for (v, &e) in vars.iter().zip(&self.0) {
            match e {
                0 => {}
                1 => s.push(*v),
                _ => s.push_str(&format!("{v}^{e}")),
            }
        }
        s
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A commutative polynomial over a finite ordered set of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CPoly {
    vars: Vec<char>,
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl CPoly {
    pub fn zero(vars: &[char], field: Field) -> Result<Self> {
        validate_vars(vars)?;
        Ok(Self {
            vars: vars.to_vec(),
            field,
            terms: BTreeMap::new(),
        })
    }

    fn zero_like(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            field: self.field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(vars: &[char], field: Field, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Scalar)>,
    {
        let mut p = Self::zero(vars, field)?;
        for (m, c) in terms {
            if m.len() != vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: vars.len(),
                    found: m.len(),
                });
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
            p.push(Monomial(m), &c);
        }
        Ok(p)
    }

    /// `c·x_i^e` as a shorthand for tests and generators.
    pub fn power(vars: &[char], field: Field, i: usize, e: u32) -> Result<Self> {
        let mut m = vec![0; vars.len()];
        if i >= vars.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                dim: vars.len(),
            });
        }
        m[i] = e;
        Self::from_terms(vars, field, [(m, field.one())])
    }

    fn push(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn vars(&self) -> &[char] {
        &self.vars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Zero constant term, i.e. membership in `K[X]⁺`.
    pub fn is_augmented(&self) -> bool {
        self.terms.keys().all(|m| m.degree() > 0)
    }

    pub fn mul(&self, other: &CPoly) -> Result<CPoly> {
        if self.vars != other.vars {
            return Err(Error::AlphabetMismatch(self.vars.len(), other.vars.len()));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &CPoly) -> CPoly {
        let mut out = self.zero_like();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.push(u.times(v), &(a * b));
            }
        }
        out
    }

    fn monomial(&self, m: &Monomial) -> CPoly {
        let mut out = self.zero_like();
        out.push(m.clone(), &self.field.one());
        out
    }
}

impl Ring for CPoly {
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.push(m.clone(), c);
        }
        out
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&m.render(&self.vars))?;
            } else {
                write!(f, "{mag} {}", m.render(&self.vars))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum CStarForm {
    /// `a ∗ b = (a·b / x²)·p`.
    ShiftTimes,
    /// `a ∗ b = p·a·b`.
    Times,
}

/// A product on `K[X]⁺` given in closed form by a polynomial `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CStar {
    form: CStarForm,
    p: CPoly,
}

impl CStar {
    pub fn p(&self) -> &CPoly {
        &self.p
    }

    /// `a ∗ b` on augmentation-zero inputs.
    pub fn mul(&self, a: &CPoly, b: &CPoly) -> Result<CPoly> {
        for q in [a, b] {
            if q.vars != self.p.vars {
                return Err(Error::AlphabetMismatch(self.p.vars.len(), q.vars.len()));
            }
            if q.field != self.p.field {
                return Err(Error::FieldMismatch(self.p.field, q.field));
            }
            if !q.is_augmented() {
                return Err(Error::NonzeroConstantTerm);
            }
        }
        Ok(self.mul_unchecked(a, b))
    }

    fn mul_unchecked(&self, a: &CPoly, b: &CPoly) -> CPoly {
        let ab = a.mul_unchecked(b);
        match self.form {
            CStarForm::Times => self.p.mul_unchecked(&ab),
            CStarForm::ShiftTimes => {
                // Every monomial of a·b has degree ≥ 2 in the single variable.
                let mut shifted = ab.zero_like();
                for (m, c) in &ab.terms {
                    shifted.push(Monomial(vec![m.0[0] - 2]), c);
                }
                shifted.mul_unchecked(&self.p)
            }
        }
    }
}

/// `x^m ∗ x^n = x^{m+n−2}·p` on `K[x]⁺`.
pub fn cpoly_single_var_product(p: &CPoly) -> Result<CStar> {
    if p.vars.len() != 1 {
        return Err(Error::WrongVariableCount {
            expected: "1".into(),
            found: p.vars.len(),
        });
    }
    if !p.is_augmented() {
        return Err(Error::NonzeroConstantTerm);
    }
    Ok(CStar {
        form: CStarForm::ShiftTimes,
        p: p.clone(),
    })
}

/// `a ∗ b = p·a·b` on `K[X]⁺`, the product determined by multiplication by `p`.
pub fn cpoly_multi_var_product(p: &CPoly) -> Result<CStar> {
    if p.vars.len() < 2 {
        return Err(Error::WrongVariableCount {
            expected: "at least 2".into(),
            found: p.vars.len(),
        });
    }
    Ok(CStar {
        form: CStarForm::Times,
        p: p.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialWitness {
    pub identity: String,
    pub a: String,
    pub b: String,
    pub c: String,
    pub lhs: String,
    pub rhs: String,
}

/// Identities of `kind` (or associativity of `∗` when `kind` is `None`) on
/// all monomial triples of total degree `≤ d`, exact arithmetic.
pub fn check_cpoly_identities(star: &CStar, kind: Option<CompatKind>, d: u32) -> Verdict<MonomialWitness> {
    let k = star.p.vars.len();
    let s = |a: &CPoly, b: &CPoly| star.mul_unchecked(a, b);
    let dot = |a: &CPoly, b: &CPoly| a.mul_unchecked(b);
    if d < 3 {
        return Verdict::Pass;
    }
    for ma in Monomial::up_to(k, d - 2) {
        for mb in Monomial::up_to(k, d - 1 - ma.degree()) {
            for mc in Monomial::up_to(k, d - ma.degree() - mb.degree()) {
                let (a, b, c) = (star.p.monomial(&ma), star.p.monomial(&mb), star.p.monomial(&mc));
                let outcomes: Vec<(String, CPoly, CPoly)> = match kind {
                    Some(kind) => kind
                        .identities()
                        .iter()
                        .map(|id| {
                            (
                                id.render(),
                                side_value(id.lhs, &a, &b, &c, &s, &dot),
                                side_value(id.rhs, &a, &b, &c, &s, &dot),
                            )
                        })
                        .collect(),
                    None => vec![("(a*b)*c = a*(b*c)".into(), s(&s(&a, &b), &c), s(&a, &s(&b, &c)))],
                };
                for (identity, lhs, rhs) in outcomes {
                    if lhs != rhs {
                        let vars = &star.p.vars;
                        return Verdict::Fail(MonomialWitness {
                            identity,
                            a: ma.render(vars),
                            b: mb.render(vars),
                            c: mc.render(vars),
                            lhs: lhs.to_string(),
                            rhs: rhs.to_string(),
                        });
                    }
                }
            }
        }
    }
    Verdict::Pass
}
