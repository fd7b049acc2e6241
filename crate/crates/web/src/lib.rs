//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every operation takes plain strings and numbers and returns a JSON
//! document; errors come back as JS exceptions carrying the message.

use bicompat::algebra::{annihilator, centroid, Algebra, Product};
use bicompat::compat::{check, solve_linear, CompatKind, CompatReport};
use bicompat::constructions::{example_3dim, example_6dim, example_band22, rectangular_band_algebra, BandSpec};
use bicompat::free::star_condition;
use bicompat::{io, Error, Field};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest band side the page accepts; a 4x4 band takes tens of seconds.
pub const MAX_BAND_SIDE: usize = 3;

/// Solution-space dimensions for a rectangular band algebra.
pub fn band_report(rows: usize, cols: usize, field: &str) -> Result<Value, Error> {
    if rows > MAX_BAND_SIDE || cols > MAX_BAND_SIDE {
        return Err(Error::ShapeMismatch(format!(
            "band sides are limited to {MAX_BAND_SIDE} here"
        )));
    }
    let field: Field = field.parse()?;
    let a = rectangular_band_algebra(BandSpec::new(rows, cols)?, field)?;
    let mut spaces = serde_json::Map::new();
    for kind in CompatKind::ALL {
        spaces.insert(kind.to_string(), json!(solve_linear(kind, a.dot())?.dim()));
    }
    Ok(json!({
        "rows": rows,
        "cols": cols,
        "field": field.to_string(),
        "dim": a.dim(),
        "annihilator": annihilator(a.dot()).dim(),
        "centroid": centroid(a.dot()).dim(),
        "spaces": spaces,
    }))
}

fn report_value(a: &Algebra, r: &CompatReport) -> Value {
    let witness = r.witness.as_ref().map(|w| {
        let (i, j, k) = w.triple;
        json!({
            "identity": r.kind.identities()[w.identity].render(),
            "at": [a.label(i), a.label(j), a.label(k)],
            "lhs": a.format_vector(&w.lhs),
            "rhs": a.format_vector(&w.rhs),
        })
    });
    json!({"kind": r.kind.to_string(), "holds": r.holds, "witness": witness})
}

/// Every relation between each extra product of a worked example and its algebra.
pub fn example_report(name: &str, field: &str) -> Result<Value, Error> {
    let field: Field = field.parse()?;
    let (a, extra): (Algebra, Vec<(&str, Product)>) = match name {
        "3dim" => {
            let (a, s, s2) = example_3dim(field)?;
            (a, vec![("star", s), ("star2", s2)])
        }
        "6dim" => {
            let (a, s) = example_6dim(field)?;
            (a, vec![("star", s)])
        }
        "band22" => {
            let (a, s) = example_band22(field)?;
            (a, vec![("star", s)])
        }
        _ => return Err(Error::Parse(format!("unknown example {name:?}"))),
    };
    let mut products = Vec::new();
    for (label, p) in &extra {
        let reports = CompatKind::ALL
            .iter()
            .map(|&k| Ok(report_value(&a, &check(k, p, a.dot())?)))
            .collect::<Result<Vec<_>, Error>>()?;
        products.push(json!({
            "product": label,
            "associative": p.is_associative().is_pass(),
            "relations": reports,
        }));
    }
    Ok(json!({"example": name, "field": field.to_string(), "labels": a.labels(), "products": products}))
}

/// The star condition for a star map in the CLI file format.
pub fn star_report(star_json: &str) -> Result<Value, Error> {
    let sm = io::read_star_map(star_json)?;
    let verdict = star_condition(&sm);
    let witness = verdict.witness().map(|w| {
        json!({
            "at": [w.x.to_string(), w.y.to_string(), w.z.to_string()],
            "lhs": w.lhs.to_string(),
            "rhs": w.rhs.to_string(),
        })
    });
    Ok(json!({"pass": verdict.is_pass(), "witness": witness}))
}

fn to_js(r: Result<Value, Error>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = bandDimensions)]
pub fn band_dimensions(rows: usize, cols: usize, field: &str) -> Result<String, JsError> {
    to_js(band_report(rows, cols, field))
}

#[wasm_bindgen(js_name = classifyExample)]
pub fn classify_example(name: &str, field: &str) -> Result<String, JsError> {
    to_js(example_report(name, field))
}

#[wasm_bindgen(js_name = checkStar)]
pub fn check_star(star_json: &str) -> Result<String, JsError> {
    to_js(star_report(star_json))
}
