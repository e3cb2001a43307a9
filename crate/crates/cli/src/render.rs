//! Plain-text renderings for `--format ascii`.

use std::fmt::Display;

use symtab_core::verify::Report;
use symtab_core::{OscillatingTableau, Ssot, Tableau, TwoLineArray};

fn grid<T: Display>(rows: &[Vec<T>]) -> String {
    if rows.is_empty() {
        return "∅".into();
    }
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let columns = cells.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..columns).map(|j| cells.iter().filter_map(|r| r.get(j)).map(|c| width(c)).max().unwrap_or(1)).collect();
    cells
        .iter()
        .map(|row| {
            let padded: Vec<String> =
                row.iter().zip(&widths).map(|(c, &w)| format!("{}{c}", " ".repeat(w - width(c)))).collect();
            padded.join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

// Combining marks (the bar over a letter) take no column.
fn width(s: &str) -> usize {
    s.chars().filter(|c| !('\u{300}'..='\u{36f}').contains(c)).count()
}

pub fn tableau<E: Display + Copy + Ord>(t: &Tableau<E>) -> String {
    grid(t.rows())
}

pub fn oscillating(q: &OscillatingTableau) -> String {
    q.shapes().iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn ssot(q: &Ssot) -> String {
    let rows: Vec<Vec<String>> = q
        .grid()
        .iter()
        .map(|row| row.iter().map(|cell| cell.iter().map(u32::to_string).collect::<Vec<_>>().join(",")).collect())
        .collect();
    format!("{}\nfinal shape {}", grid(&rows), q.final_shape())
}

pub fn array(a: &TwoLineArray) -> String {
    let top: Vec<String> = a.pairs().iter().map(|p| p.0.to_string()).collect();
    let bottom: Vec<String> = a.pairs().iter().map(|p| p.1.to_string()).collect();
    grid(&[top, bottom])
}

pub fn report(r: &Report) -> String {
    let status = if r.passed { "PASS" } else { "FAIL" };
    let mut line = format!("{status}  {} ({} cases)", r.suite, r.checked);
    if let Some(c) = &r.counterexample {
        line.push_str(&format!("\n  counterexample: {c}"));
    }
    line
}
