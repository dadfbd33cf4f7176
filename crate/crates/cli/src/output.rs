//! Reading inputs and writing results in the three output formats.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Serialize;
use sltiling::tiling::io::{window_from_csv, window_from_json, window_to_csv, window_to_json};
use sltiling::{Error, Result, VerifyReport, Window};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

/// Where results go: a file, or standard output.
pub struct Sink {
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Sink {
    pub fn emit(&self, text: &str) -> Result<()> {
        let mut text = text.to_string();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &self.out {
            Some(p) => fs::write(p, text)?,
            None => std::io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    }

    pub fn json(&self, value: &impl Serialize) -> Result<()> {
        self.emit(&serde_json::to_string_pretty(value)?)
    }

    pub fn window(&self, w: &Window) -> Result<()> {
        match self.format {
            Format::Json => self.emit(&window_to_json(w)?),
            Format::Csv => self.emit(&window_to_csv(w)?),
            Format::Text => self.emit(&render_window(w)),
        }
    }

    pub fn report(&self, reports: &[VerifyReport]) -> Result<()> {
        match self.format {
            Format::Json | Format::Csv => self.json(&reports),
            Format::Text => self.emit(
                &reports
                    .iter()
                    .map(report_text)
                    .collect::<Vec<_>>()
                    .join("\n"),
            ),
        }
    }
}

/// Entries right-aligned in columns of a common width.
pub fn render_window(w: &Window) -> String {
    let cells: Vec<Vec<String>> = w
        .entries()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| format!("{c:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn report_text(r: &VerifyReport) -> String {
    let status = if r.is_verified() { "ok" } else { "FAILED" };
    let mut out = format!(
        "{status}: {} ({} checked, {} failures)",
        r.criterion,
        r.checked,
        r.failures.len()
    );
    for f in &r.failures {
        out.push_str(&format!(
            "\n  at ({}, {}): expected {}, got {}",
            f.anchor.0, f.anchor.1, f.expected, f.got
        ));
    }
    out
}

/// Window from a JSON or CSV file; the extension decides, falling back to
/// the first character.
pub fn read_window(path: &Path) -> Result<Window> {
    let text = fs::read_to_string(path)?;
    let json = match path.extension().and_then(|e| e.to_str()) {
        Some("json") => true,
        Some("csv") => false,
        _ => text.trim_start().starts_with('{'),
    };
    if json {
        window_from_json(&text)
    } else {
        window_from_csv(&text)
    }
}

/// `i,j,rows,cols`.
pub fn parse_window_spec(s: &str) -> std::result::Result<(i64, i64, usize, usize), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [i, j, r, c] = parts.as_slice() else {
        return Err(format!("expected i,j,rows,cols, got {s:?}"));
    };
    let int = |t: &str| t.parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    let size = |t: &str| t.parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((int(i)?, int(j)?, size(r)?, size(c)?))
}

pub fn usage(msg: impl Into<String>) -> Error {
    Error::Argument(msg.into())
}
