use std::fmt::Write as _;
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Exit {
    Ok = 0,
    None = 1,
    Usage = 2,
    Budget = 3,
    Counterexample = 4,
}

/// One command's result, rendered up front in every format.
pub struct Rendered {
    pub json: String,
    pub text: String,
    pub csv: String,
    pub exit: Exit,
}

impl Rendered {
    pub fn new<T: Serialize>(data: &T, text: String, table: &Table, exit: Exit) -> Self {
        let mut json = serde_json::to_string_pretty(data).expect("report serializes");
        json.push('\n');
        Self {
            json,
            text,
            csv: table.to_csv(),
            exit,
        }
    }

    pub fn body(&self, format: Format) -> &str {
        match format {
            Format::Text => &self.text,
            Format::Json => &self.json,
            Format::Csv => &self.csv,
        }
    }
}

/// Header plus rows, used for CSV and aligned text.
#[derive(Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows
            .push(row.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
    }

    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(String::len).collect();
        for row in &self.rows {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.len());
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&self.header).chain(&self.rows) {
            let line = row
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ");
            let _ = writeln!(out, "{}", line.trim_end());
        }
        out
    }
}

/// `key value` lines for the text format; empty values are left out.
pub fn lines(pairs: &[(&str, String)]) -> String {
    let mut out = String::new();
    for (k, v) in pairs.iter().filter(|(_, v)| !v.is_empty()) {
        let _ = writeln!(out, "{k} {v}");
    }
    out
}

pub fn emit(body: &str, out: Option<&Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, body),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_renders() {
        let mut t = Table::new(["n", "count"]);
        t.push([1, 1]);
        t.push([10, 9]);
        assert_eq!(t.to_csv(), "n,count\n1,1\n10,9\n");
        assert_eq!(t.to_text(), " n  count\n 1      1\n10      9\n");
    }

    #[test]
    fn csv_quotes_lists() {
        let mut t = Table::new(["xray"]);
        t.push(["(1,0,1)"]);
        assert_eq!(t.to_csv(), "xray\n\"(1,0,1)\"\n");
    }
}
