//! Output plumbing: format selection, the stdout-or-file sink, and
//! deterministic number formatting shared by every emitter.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutFormat {
    Csv,
    Json,
    Svg,
}

pub fn parse_format(s: &str) -> Result<OutFormat, CliError> {
    match s {
        "csv" => Ok(OutFormat::Csv),
        "json" => Ok(OutFormat::Json),
        "svg" => Ok(OutFormat::Svg),
        other => Err(CliError::Config(format!(
            "unknown format {other:?}; expected csv, json, or svg"
        ))),
    }
}

pub struct Output {
    path: Option<PathBuf>,
}

impl Output {
    pub fn new(path: Option<PathBuf>) -> Self {
        Self { path }
    }

    pub fn write(&self, text: &str) -> Result<(), CliError> {
        match &self.path {
            Some(path) => std::fs::write(path, text)?,
            None => {
                let stdout = std::io::stdout();
                stdout.lock().write_all(text.as_bytes())?;
            }
        }
        Ok(())
    }

    /// Path for a companion artifact, `<out>.<suffix>`. None when writing to
    /// stdout: a second document would corrupt the primary stream.
    pub fn sidecar(&self, suffix: &str) -> Option<PathBuf> {
        self.path.as_ref().map(|p| {
            let mut name = p.clone().into_os_string();
            name.push(".");
            name.push(suffix);
            PathBuf::from(name)
        })
    }
}

pub fn write_sidecar(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text)?;
    Ok(())
}

/// Shortest round-trip decimal text; infinities come out as `inf`/`-inf`.
/// Identical inputs give identical bytes, which the determinism contract
/// leans on.
pub fn fnum(x: f64) -> String {
    format!("{x}")
}

pub fn json_doc<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Config(format!("serialization failed: {e}")))?;
    text.push('\n');
    Ok(text)
}

/// A header row plus numeric records, rendered with [`fnum`].
pub fn csv_table(columns: &[&str], rows: &[Vec<f64>]) -> String {
    let mut text = String::new();
    text.push_str(&columns.join(","));
    text.push('\n');
    for row in rows {
        let mut first = true;
        for v in row {
            if !first {
                text.push(',');
            }
            text.push_str(&fnum(*v));
            first = false;
        }
        text.push('\n');
    }
    text
}

/// The same table as a JSON document with explicit column names. Non-finite
/// entries (the log of an exact zero) serialize as null.
pub fn json_table(columns: &[&str], rows: &[Vec<f64>]) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct Table<'a> {
        columns: &'a [&'a str],
        rows: &'a [Vec<f64>],
    }
    json_doc(&Table { columns, rows })
}
