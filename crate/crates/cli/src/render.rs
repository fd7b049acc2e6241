//! Human-readable output in terms of basis labels.

use bicompat::algebra::{format_with_labels, Product, Side};
use bicompat::compat::{CompatReport, ProductSpace};

pub fn side_name(side: Side) -> &'static str {
    match side {
        Side::Left => "left",
        Side::Right => "right",
        Side::TwoSided => "two-sided",
    }
}

pub fn compat_report(out: &mut String, labels: &[String], r: &CompatReport) {
    match &r.witness {
        None => out.push_str(&format!("{}: holds\n", r.kind)),
        Some(w) => {
            let (i, j, k) = w.triple;
            out.push_str(&format!("{}: fails\n", r.kind));
            out.push_str(&format!(
                "  {} at (a, b, c) = ({}, {}, {})\n",
                r.kind.identities()[w.identity].render(),
                labels[i],
                labels[j],
                labels[k]
            ));
            out.push_str(&format!("    lhs: {}\n", format_with_labels(labels, &w.lhs)));
            out.push_str(&format!("    rhs: {}\n", format_with_labels(labels, &w.rhs)));
        }
    }
}

/// Nonzero basis products `b_i * b_j = ...`, one per line.
pub fn product_table(out: &mut String, labels: &[String], p: &Product) {
    let n = p.dim();
    let mut any = false;
    for i in 0..n {
        for j in 0..n {
            let cell = p.basis_product(i, j);
            if cell.is_empty() {
                continue;
            }
            let mut v = vec![p.field().zero(); n];
            for (t, c) in cell {
                v[*t] = c.clone();
            }
            out.push_str(&format!(
                "    {} * {} = {}\n",
                labels[i],
                labels[j],
                format_with_labels(labels, &v)
            ));
            any = true;
        }
    }
    if !any {
        out.push_str("    (zero product)\n");
    }
}

pub fn product_space(out: &mut String, labels: &[String], ps: &ProductSpace) {
    out.push_str(&format!(
        "{} products on a {}-dim algebra over {}: dim {}\n",
        ps.kind,
        ps.base.dim(),
        ps.base.field(),
        ps.dim()
    ));
    for (n, p) in ps.basis_products().iter().enumerate() {
        out.push_str(&format!("  basis product {}:\n", n + 1));
        product_table(out, labels, p);
    }
}
