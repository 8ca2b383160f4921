use std::fmt::Write as _;

use mckay_core::chartab::CharacterTable;
use mckay_core::{QSeries, Rational};
use serde_json::{json, Value};

/// A finished command: text for humans, a JSON payload, and notes.
pub struct Output {
    pub command: String,
    pub text: String,
    pub result: Value,
    pub diagnostics: Vec<String>,
    /// False when the command ran but a check it performs failed.
    pub success: bool,
}

impl Output {
    pub fn new(command: &str, text: String, result: Value) -> Self {
        Self {
            command: command.to_string(),
            text,
            result,
            diagnostics: Vec::new(),
            success: true,
        }
    }

    pub fn failure(command: &str, error: &mckay_core::Error) -> Self {
        Self {
            command: command.to_string(),
            text: String::new(),
            result: Value::Null,
            diagnostics: vec![error.to_string()],
            success: false,
        }
    }

    pub fn envelope(&self) -> String {
        let value = json!({
            "command": self.command,
            "version": env!("CARGO_PKG_VERSION"),
            "result": self.result,
            "diagnostics": self.diagnostics,
        });
        serde_json::to_string_pretty(&value).expect("JSON values always serialize")
    }
}

/// Integers print bare, other rationals as `p/q`.
pub fn rational(r: &Rational) -> String {
    mckay_core::exactnum::render_rational(r)
}

pub fn series_json(s: &QSeries) -> Value {
    json!({
        "valuation": s.valuation(),
        "order": s.order(),
        "coeffs": s.coeffs().iter().map(rational).collect::<Vec<_>>(),
    })
}

/// One `q^n  c` line per coefficient.
pub fn series_text(s: &QSeries) -> String {
    let mut out = String::new();
    for (k, c) in s.coeffs().iter().enumerate() {
        let _ = writeln!(out, "q^{:<4} {}", s.valuation() + k as i64, rational(c));
    }
    let _ = writeln!(out, "+ O(q^{})", s.order() + 1);
    out
}

/// Character table with a class-size header row, columns padded to width.
pub fn table_text(table: &CharacterTable, orders: Option<&[u32]>) -> String {
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["size".to_string()];
    header.extend(table.class_sizes().iter().map(|s| s.to_string()));
    rows.push(header);
    if let Some(orders) = orders {
        let mut line = vec!["order".to_string()];
        line.extend(orders.iter().map(|o| o.to_string()));
        rows.push(line);
    }
    for (i, row) in table.entries().iter().enumerate() {
        let mut line = vec![format!("X{}", i + 1)];
        line.extend(row.iter().map(|x| x.to_string()));
        rows.push(line);
    }
    let columns = rows[0].len();
    let widths: Vec<usize> = (0..columns)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in &rows {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    out
}

pub fn table_json(table: &CharacterTable) -> Value {
    json!({
        "order": table.order(),
        "class_sizes": table.class_sizes(),
        "class_orders": table.classes().map(|c| c.orders.clone()),
        "degrees": table.degrees(),
        "entries": table
            .entries()
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn matrix_text(m: &[Vec<u64>]) -> String {
    let mut out = String::new();
    for row in m {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
    out
}
