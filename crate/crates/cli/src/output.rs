use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde_json::{json, Value};

use crate::args::{Format, RunConfig};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Twelve significant digits in scientific notation, independent of locale;
/// negative zero prints as zero.
pub fn format_number(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

fn render_cell(cell: &Cell) -> String {
    match cell {
        Cell::Num(x) => format_number(*x),
        Cell::Text(s) => s.clone(),
    }
}

pub fn to_csv(table: &Table) -> String {
    let mut out = table.columns.join(",");
    out.push('\n');
    for row in &table.rows {
        let line: Vec<String> = row.iter().map(render_cell).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// `{config, columns, rows}`; numbers go through the same 12-digit
/// rendering as the CSV so both formats carry identical values.
pub fn to_json(table: &Table, config: &RunConfig) -> String {
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            Value::Array(
                row.iter()
                    .map(|cell| match cell {
                        Cell::Num(x) => {
                            let rounded: f64 = format_number(*x).parse().expect("formatted number parses");
                            json!(rounded)
                        }
                        Cell::Text(s) => json!(s),
                    })
                    .collect(),
            )
        })
        .collect();
    let doc = json!({
        "config": config,
        "columns": table.columns,
        "rows": rows,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
    s.push('\n');
    s
}

pub fn render(table: &Table, config: &RunConfig) -> String {
    match config.format {
        Format::Csv => to_csv(table),
        Format::Json => to_json(table, config),
    }
}

/// Writes to a sibling temporary file and renames it into place, so a
/// failed run never leaves a partial file behind.
pub fn emit(text: &str, path: Option<&Path>) -> io::Result<()> {
    match path {
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
        Some(path) => {
            let mut tmp = path.as_os_str().to_owned();
            tmp.push(".partial");
            let tmp = Path::new(&tmp);
            let result = fs::write(tmp, text).and_then(|_| fs::rename(tmp, path));
            if result.is_err() {
                let _ = fs::remove_file(tmp);
            }
            result
        }
    }
}
