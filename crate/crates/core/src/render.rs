//! Plain-text pictures of diagrams and fillings, row 1 on top. Absent boxes
//! inside the bounding rectangle print as `.`.

use std::collections::BTreeMap;

use crate::diagram::{Cell, Diagram};
use crate::schur::LabelledFilling;
use crate::tableau::{Tableau, TypeFilling};

fn grid(values: &BTreeMap<Cell, String>) -> String {
    let rows = values.keys().map(|c| c.row).max().unwrap_or(0);
    let cols = values.keys().map(|c| c.col).max().unwrap_or(0);
    let width = values.values().map(|v| v.len()).max().unwrap_or(1);
    let mut out = String::new();
    for r in 1..=rows {
        let line: Vec<String> = (1..=cols)
            .map(|c| {
                let v = values.get(&Cell::new(r, c)).map(String::as_str).unwrap_or(".");
                format!("{v:>width$}")
            })
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

fn numbers(map: &BTreeMap<Cell, u32>) -> String {
    grid(&map.iter().map(|(&c, v)| (c, v.to_string())).collect())
}

pub fn render_diagram(d: &Diagram) -> String {
    grid(&d.iter().map(|c| (c, "#".to_string())).collect())
}

pub fn render_type(ty: &TypeFilling) -> String {
    numbers(ty.entries())
}

pub fn render_tableau(t: &Tableau) -> String {
    numbers(t.entries())
}

pub fn render_labels(f: &LabelledFilling) -> String {
    numbers(f.labels())
}
