use leibalg::linalg::{Matrix, Subspace};
use leibalg::Scalar;
use serde_json::{json, Value};

pub fn matrix_json(m: &Matrix) -> Value {
    json!(m.to_strings())
}

pub fn vector_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub fn subspace_json(s: &Subspace) -> Value {
    json!(s
        .basis_vectors()
        .iter()
        .map(|v| vector_strings(v))
        .collect::<Vec<_>>())
}

/// Row-major with right-aligned columns.
pub fn matrix_text(m: &Matrix, indent: usize) -> String {
    let rows = m.to_strings();
    let cols = rows.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let pad = " ".repeat(indent);
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            format!("{pad}[ {} ]", cells.join("  "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Basis vectors written in terms of the basis names.
pub fn subspace_text(s: &Subspace, names: &[String]) -> String {
    if s.is_zero() {
        return "0".to_string();
    }
    let vecs: Vec<String> = s
        .basis_vectors()
        .iter()
        .map(|v| combination(v, names))
        .collect();
    format!("<{}>", vecs.join(", "))
}

pub fn combination(v: &[Scalar], names: &[String]) -> String {
    let mut out = String::new();
    for (c, n) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let (neg, mag) = match s.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, s),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != "1" {
            out.push_str(&mag);
            out.push('·');
        }
        out.push_str(n);
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}
