//! Label-indexed tables of bilinear maps: row = first argument, column =
//! second, cell = value as a combination of basis labels.

use crate::hopf::HopfAlgebra;
use crate::linalg::{LinearMap, SparseVec};

/// `3x − gx`, `2`, `0`, …
pub fn combination(h: &HopfAlgebra, v: &SparseVec) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (i, c)) in v.iter().enumerate() {
        let neg = c.is_negative_repr();
        let abs = if neg { -c.clone() } else { c.clone() };
        if neg {
            s.push('−');
        } else if k > 0 {
            s.push('+');
        }
        let label = &h.labels()[*i];
        if abs.is_one() {
            s.push_str(label);
        } else {
            s.push_str(&format!("{abs}{label}"));
        }
    }
    s
}

pub fn bilinear_table(h: &HopfAlgebra, m: &LinearMap) -> Vec<Vec<String>> {
    let d = h.dim();
    (0..d).map(|a| (0..d).map(|b| combination(h, &m.column(a * d + b))).collect()).collect()
}

/// Plain-text grid with labels along both edges.
pub fn render_table(h: &HopfAlgebra, cells: &[Vec<String>]) -> String {
    let labels = h.labels();
    let width = cells
        .iter()
        .flatten()
        .map(|c| c.chars().count())
        .chain(labels.iter().map(|l| l.chars().count()))
        .max()
        .unwrap_or(1);
    let pad = |s: &str| format!("{s:>width$}");
    let mut out = String::new();
    out.push_str(&pad(""));
    out.push_str(" |");
    for l in labels {
        out.push(' ');
        out.push_str(&pad(l));
    }
    out.push('\n');
    out.push_str(&"-".repeat((width + 1) * (labels.len() + 1) + 1));
    out.push('\n');
    for (l, row) in labels.iter().zip(cells) {
        out.push_str(&pad(l));
        out.push_str(" |");
        for c in row {
            out.push(' ');
            out.push_str(&pad(c));
        }
        out.push('\n');
    }
    out
}

pub fn bilinear_json(h: &HopfAlgebra, m: &LinearMap) -> serde_json::Value {
    let cells = bilinear_table(h, m);
    serde_json::Value::Object(
        h.labels()
            .iter()
            .zip(cells)
            .map(|(l, row)| {
                let row = h.labels().iter().cloned().zip(row.into_iter().map(serde_json::Value::String)).collect();
                (l.clone(), serde_json::Value::Object(row))
            })
            .collect(),
    )
}
