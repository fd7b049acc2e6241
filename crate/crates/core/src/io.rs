//! JSON file and report formats.
//!
//! Algebra files look like
//! `{"dim": 2, "field": "Q", "labels": ["a", "b"], "table": [[0, 1, 1, "1/2"]]}`
//! with 0-based indices and omitted triples meaning zero. A product file is
//! the same document with the table under `"product"`. Prime fields are
//! written `{"Fp": 5}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Algebra, Product};
use crate::compat::ProductSpace;
use crate::error::{Error, Result};
use crate::free::{CPoly, NCPoly, StarMap};
use crate::scalar::{Field, Scalar};

/// Coefficients are normally strings; plain JSON integers are accepted too.
#[derive(Deserialize)]
#[serde(untagged)]
enum Coeff {
    Text(String),
    Int(i64),
}

impl Coeff {
    fn parse(&self, field: Field) -> Result<Scalar> {
        match self {
            Coeff::Text(s) => field.parse(s),
            Coeff::Int(v) => Ok(field.from_i64(*v)),
        }
    }
}

type Entry = (usize, usize, usize, Coeff);

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableIn {
    dim: usize,
    field: Field,
    #[serde(default)]
    labels: Option<Vec<String>>,
    #[serde(default)]
    table: Option<Vec<Entry>>,
    #[serde(default)]
    product: Option<Vec<Entry>>,
}

#[derive(Serialize)]
struct TableOut<'a> {
    dim: usize,
    field: Field,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<&'a [String]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<Vec<(usize, usize, usize, String)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    product: Option<Vec<(usize, usize, usize, String)>>,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn checked_field(field: Field) -> Result<Field> {
    match field {
        Field::Rationals => Ok(field),
        Field::Prime(p) => Field::prime(p),
    }
}

/// A parsed table document: its product (not checked for associativity) and
/// its labels if present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableFile {
    pub product: Product,
    pub labels: Option<Vec<String>>,
}

impl TableFile {
    /// Labels from the file, or `e1..en`.
    pub fn labels_or_default(&self) -> Vec<String> {
        self.labels
            .clone()
            .unwrap_or_else(|| (1..=self.product.dim()).map(|i| format!("e{i}")).collect())
    }

    /// The algebra described by the file; fails if the product is not associative.
    pub fn into_algebra(self) -> Result<Algebra> {
        let labels = self.labels_or_default();
        Algebra::new(labels, self.product)
    }
}

/// Reads an algebra or product document. Either key, `"table"` or
/// `"product"`, is accepted, but not both.
pub fn read_table(json: &str) -> Result<TableFile> {
    let doc: TableIn = serde_json::from_str(json).map_err(parse_err)?;
    let field = checked_field(doc.field)?;
    if doc.dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let entries = match (doc.table, doc.product) {
        (Some(t), None) | (None, Some(t)) => t,
        (None, None) => return Err(Error::Parse("missing \"table\" or \"product\"".into())),
        (Some(_), Some(_)) => return Err(Error::Parse("both \"table\" and \"product\" given".into())),
    };
    if let Some(labels) = &doc.labels {
        if labels.len() != doc.dim {
            return Err(Error::DimensionMismatch {
                expected: doc.dim,
                found: labels.len(),
            });
        }
    }
    let mut product = Product::zero(field, doc.dim);
    for (i, j, k, c) in &entries {
        product.add_entry(*i, *j, *k, &c.parse(field)?)?;
    }
    Ok(TableFile {
        product,
        labels: doc.labels,
    })
}

fn entries_out(p: &Product) -> Vec<(usize, usize, usize, String)> {
    p.entries().map(|(i, j, k, c)| (i, j, k, c.to_string())).collect()
}

/// An algebra file (`"table"` key), pretty-printed.
pub fn algebra_to_json(a: &Algebra) -> String {
    let doc = TableOut {
        dim: a.dim(),
        field: a.field(),
        labels: Some(a.labels()),
        table: Some(entries_out(a.dot())),
        product: None,
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

/// A product file (`"product"` key), pretty-printed.
pub fn product_to_json(p: &Product, labels: Option<&[String]>) -> String {
    let doc = TableOut {
        dim: p.dim(),
        field: p.field(),
        labels,
        table: None,
        product: Some(entries_out(p)),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

/// Sparse `[i, j, k, "c"]` rows of a product, as used inside reports.
pub fn product_entries_value(p: &Product) -> Value {
    serde_json::to_value(entries_out(p)).expect("serializable")
}

/// `{"kind", "dim", "basis"}` where each basis element is written as the
/// sparse entry list of the corresponding product, in canonical order.
pub fn space_report(ps: &ProductSpace) -> Value {
    let basis: Vec<Value> = ps.basis_products().iter().map(product_entries_value).collect();
    serde_json::json!({
        "kind": ps.kind,
        "dim": ps.dim(),
        "basis": basis,
    })
}

/// `[[word, "c"], ...]`, length-lexicographic.
pub fn ncpoly_to_value(p: &NCPoly) -> Value {
    let terms: Vec<(String, String)> = p.terms().map(|(w, c)| (w.render(p.vars()), c.to_string())).collect();
    serde_json::to_value(terms).expect("serializable")
}

pub fn ncpoly_from_value(v: &Value, vars: &[char], field: Field) -> Result<NCPoly> {
    let terms: Vec<(String, Coeff)> = serde_json::from_value(v.clone()).map_err(parse_err)?;
    let mut p = NCPoly::zero(vars, field)?;
    for (w, c) in &terms {
        p.add_term(NCPoly::parse_word(vars, w)?, &c.parse(field)?)?;
    }
    Ok(p)
}

/// `[[[e1, .., ek], "c"], ...]`.
pub fn cpoly_to_value(p: &CPoly) -> Value {
    let terms: Vec<(&[u32], String)> = p.terms().map(|(m, c)| (m.0.as_slice(), c.to_string())).collect();
    serde_json::to_value(terms).expect("serializable")
}

pub fn cpoly_from_value(v: &Value, vars: &[char], field: Field) -> Result<CPoly> {
    let terms: Vec<(Vec<u32>, Coeff)> = serde_json::from_value(v.clone()).map_err(parse_err)?;
    let terms = terms
        .iter()
        .map(|(m, c)| Ok((m.clone(), c.parse(field)?)))
        .collect::<Result<Vec<_>>>()?;
    CPoly::from_terms(vars, field, terms)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StarIn {
    vars: String,
    field: Field,
    table: BTreeMap<String, Value>,
}

/// Parses the variable string of a star file, e.g. `"xy"`.
pub fn parse_vars(s: &str) -> Vec<char> {
    s.chars().collect()
}

/// Reads `{"vars": "xy", "field": "Q", "table": {"x,y": [["xy", "1"]], ...}}`;
/// missing pairs map to zero.
pub fn read_star_map(json: &str) -> Result<StarMap> {
    let doc: StarIn = serde_json::from_str(json).map_err(parse_err)?;
    let field = checked_field(doc.field)?;
    let vars = parse_vars(&doc.vars);
    let mut entries = BTreeMap::new();
    for (key, v) in &doc.table {
        let pair: Vec<char> = key.chars().filter(|c| !c.is_whitespace()).collect();
        let (x, y) = match pair.as_slice() {
            [x, ',', y] => (*x, *y),
            _ => {
                return Err(Error::Parse(format!(
                    "star table key {key:?} is not of the form \"x,y\""
                )))
            }
        };
        for c in [x, y] {
            if !vars.contains(&c) {
                return Err(Error::Parse(format!("`{c}` is not a variable")));
            }
        }
        entries.insert((x, y), ncpoly_from_value(v, &vars, field)?);
    }
    StarMap::from_table(&vars, field, &entries)
}

/// Inverse of [`read_star_map`]; zero entries are omitted.
pub fn star_map_to_json(sm: &StarMap) -> String {
    let table: BTreeMap<String, Value> = sm
        .entries()
        .filter(|(_, _, p)| !p.is_zero())
        .map(|(x, y, p)| (format!("{x},{y}"), ncpoly_to_value(p)))
        .collect();
    let doc = serde_json::json!({
        "vars": sm.vars().iter().collect::<String>(),
        "field": sm.field(),
        "table": table,
    });
    serde_json::to_string_pretty(&doc).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example_3dim, matrix_algebra};

    const Q: Field = Field::Rationals;

    #[test]
    fn algebra_round_trip() {
        let a = matrix_algebra(2, Field::prime(5).unwrap()).unwrap();
        let text = algebra_to_json(&a);
        assert!(text.contains("\"Fp\": 5"));
        let back = read_table(&text).unwrap().into_algebra().unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn product_round_trip() {
        let (a, star, _) = example_3dim(Q).unwrap();
        let text = product_to_json(&star, Some(a.labels()));
        let back = read_table(&text).unwrap();
        assert_eq!(back.product, star);
        assert_eq!(back.labels.as_deref(), Some(a.labels()));
    }

    #[test]
    fn integer_coefficients_and_default_labels() {
        let f = read_table(r#"{"dim": 2, "field": "Q", "table": [[0, 0, 0, 1], [0, 1, 1, "-3/6"]]}"#).unwrap();
        assert_eq!(f.product.coefficient(0, 1, 1), Q.from_ratio(-1, 2).unwrap());
        assert_eq!(f.labels_or_default(), vec!["e1", "e2"]);
    }

    #[test]
    fn malformed_documents() {
        assert!(matches!(read_table("{"), Err(Error::Parse(_))));
        assert!(matches!(
            read_table(r#"{"dim": 1, "field": "Q"}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            read_table(r#"{"dim": 1, "field": "Q", "table": [[0, 0, 0, "x"]]}"#),
            Err(Error::Parse(_))
        ));
        assert_eq!(
            read_table(r#"{"dim": 1, "field": {"Fp": 4}, "table": []}"#),
            Err(Error::NotPrime(4))
        );
        assert_eq!(
            read_table(r#"{"dim": 1, "field": "Q", "table": [[0, 0, 1, "1"]]}"#),
            Err(Error::IndexOutOfRange { index: 1, dim: 1 })
        );
        assert_eq!(
            read_table(r#"{"dim": 2, "field": "Q", "labels": ["a"], "table": []}"#),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        );
        assert_eq!(
            read_table(r#"{"dim": 0, "field": "Q", "table": []}"#),
            Err(Error::ZeroDimension)
        );
    }

    #[test]
    fn star_map_round_trip() {
        let text =
            r#"{"vars": "xy", "field": "Q", "table": {"x,x": [["y", "1"]], "y, x": [["xy", "2"], ["x", "-1"]]}}"#;
        let sm = read_star_map(text).unwrap();
        assert_eq!(sm.get(0, 0).to_string(), "y");
        assert_eq!(sm.get(1, 0).to_string(), "-x + 2 xy");
        assert!(sm.get(0, 1).is_zero());
        assert_eq!(read_star_map(&star_map_to_json(&sm)).unwrap(), sm);
        assert!(read_star_map(r#"{"vars": "xy", "field": "Q", "table": {"x,z": []}}"#).is_err());
        assert_eq!(
            read_star_map(r#"{"vars": "xy", "field": "Q", "table": {"x,x": [["", "1"]]}}"#),
            Err(Error::NonzeroConstantTerm)
        );
    }

    #[test]
    fn polynomial_values() {
        let vars = ['x', 'y'];
        let v: Value = serde_json::from_str(r#"[["yx", "1/2"], ["x", 3]]"#).unwrap();
        let p = ncpoly_from_value(&v, &vars, Q).unwrap();
        assert_eq!(ncpoly_to_value(&p), serde_json::json!([["x", "3"], ["yx", "1/2"]]));
        let v: Value = serde_json::from_str(r#"[[[2, 0], "1"], [[0, 1], "-1"]]"#).unwrap();
        let c = cpoly_from_value(&v, &vars, Q).unwrap();
        assert_eq!(cpoly_to_value(&c), serde_json::json!([[[0, 1], "-1"], [[2, 0], "1"]]));
    }
}
