//! Window serialization: JSON through serde, CSV as a plain grid preceded by
//! a `# origin i j` line.

use std::io::{BufRead, Write};

use super::window::Window;
use crate::algebra::scalar;
use crate::error::{Error, Result};

pub fn window_to_json(w: &Window) -> Result<String> {
    Ok(serde_json::to_string_pretty(w)?)
}

pub fn window_from_json(s: &str) -> Result<Window> {
    let w: Window = serde_json::from_str(s)?;
    w.validate()?;
    Ok(w)
}

pub fn write_csv(w: &Window, out: impl Write) -> Result<()> {
    let mut out = out;
    writeln!(out, "# origin {} {}", w.origin.0, w.origin.1)?;
    let mut wr = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    for row in w.entries() {
        wr.write_record(row.iter().map(scalar::format))
            .map_err(|e| Error::Io(e.to_string()))?;
    }
    wr.flush()?;
    Ok(())
}

pub fn window_to_csv(w: &Window) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(w, &mut buf)?;
    String::from_utf8(buf).map_err(|e| Error::Io(e.to_string()))
}

pub fn read_csv(input: impl BufRead) -> Result<Window> {
    let mut input = input;
    let mut first = String::new();
    input.read_line(&mut first)?;
    let origin = parse_origin(first.trim())?;
    let mut rest = String::new();
    input.read_to_string(&mut rest)?;
    let mut rd = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(rest.as_bytes());
    let mut entries = Vec::new();
    for rec in rd.records() {
        let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
        entries.push(rec.iter().map(scalar::parse).collect::<Result<Vec<_>>>()?);
    }
    Window::new(origin, entries)
}

pub fn window_from_csv(s: &str) -> Result<Window> {
    read_csv(s.as_bytes())
}

fn parse_origin(line: &str) -> Result<(i64, i64)> {
    let bad = || Error::Parse(format!("expected '# origin i j', got {line:?}"));
    let rest = line.strip_prefix('#').ok_or_else(bad)?.trim();
    let rest = rest.strip_prefix("origin").ok_or_else(bad)?;
    let nums: Vec<i64> = rest
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    match nums.as_slice() {
        [i, j] => Ok((*i, *j)),
        _ => Err(bad()),
    }
}
