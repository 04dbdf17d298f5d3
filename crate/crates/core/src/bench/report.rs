use std::fmt::Write as _;
use std::str::FromStr;

use super::runner::BenchRecord;
use crate::error::{Error, Result};

pub const CSV_HEADER: &str = "cipher,op,length,wall_time_ns,ciphertext_bytes,key_space";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReportFormat {
    Csv,
    Table,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "table" => Ok(ReportFormat::Table),
            other => Err(Error::UnknownFormat(other.to_owned())),
        }
    }
}

fn fields(r: &BenchRecord) -> [String; 6] {
    [
        r.cipher.name().to_owned(),
        r.op.name().to_owned(),
        r.text_length.to_string(),
        r.wall_time_ns.to_string(),
        r.ciphertext_size.to_string(),
        r.key_space_size.to_string(),
    ]
}

/// Renders `records` as CSV (header plus one row each) or as an aligned table.
pub fn emit_report(records: &[BenchRecord], format: ReportFormat) -> Result<Vec<u8>> {
    if records.is_empty() {
        return Err(Error::EmptyRecords);
    }
    let rows: Vec<[String; 6]> = records.iter().map(fields).collect();
    let mut out = String::new();
    match format {
        ReportFormat::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for row in &rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
        }
        ReportFormat::Table => {
            let header: Vec<&str> = CSV_HEADER.split(',').collect();
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let mut line = |cells: &[&str]| {
                let mut parts = Vec::with_capacity(cells.len());
                for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
                    // text columns left-aligned, numbers right-aligned
                    if i < 2 {
                        parts.push(format!("{cell:<w$}"));
                    } else {
                        parts.push(format!("{cell:>w$}"));
                    }
                }
                let _ = writeln!(out, "{}", parts.join("  ").trim_end());
            };
            line(&header);
            let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
            line(&rule.iter().map(String::as_str).collect::<Vec<_>>());
            for row in &rows {
                line(&row.iter().map(String::as_str).collect::<Vec<_>>());
            }
        }
    }
    Ok(out.into_bytes())
}
