//! Record formatting: 12 significant digits, comma-separated, empty cells
//! for absent optional values, nats/bits display scaling.

use std::f64::consts::LN_2;
use std::io::Write;
use std::path::Path;

use crate::config::CliError;

/// Display unit for entropic quantities. Internally everything is in nats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Unit {
    pub bits: bool,
}

impl Unit {
    pub fn scale(self, nats: f64) -> f64 {
        if self.bits {
            nats / LN_2
        } else {
            nats
        }
    }

    pub fn name(self) -> &'static str {
        if self.bits {
            "bits"
        } else {
            "nats"
        }
    }
}

/// 12 significant digits, deterministic scientific notation.
pub fn sig12(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v }; // never print -0
    format!("{v:.11e}")
}

pub fn opt_sig12(v: Option<f64>) -> String {
    v.map(sig12).unwrap_or_default()
}

/// Ordered named columns of reals with a `#` provenance line on top.
pub struct OutputRecord {
    comment: String,
    header_line: String,
    columns: usize,
    rows: Vec<Vec<String>>,
}

impl OutputRecord {
    pub fn new(comment: String, header: &[&str]) -> Self {
        Self {
            comment,
            header_line: header.join(","),
            columns: header.len(),
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns);
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut text = String::new();
        text.push_str("# ");
        text.push_str(&self.comment);
        text.push('\n');
        text.push_str(&self.header_line);
        text.push('\n');
        for row in &self.rows {
            text.push_str(&row.join(","));
            text.push('\n');
        }
        text
    }

    pub fn print(&self) {
        print!("{}", self.render());
    }

    pub fn write_file(&self, path: &Path) -> Result<(), CliError> {
        let mut file = std::fs::File::create(path)
            .map_err(|e| CliError::Io(format!("cannot create {}: {e}", path.display())))?;
        file.write_all(self.render().as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
    }
}
