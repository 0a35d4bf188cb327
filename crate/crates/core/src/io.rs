//! Text and JSON forms of matrices and vectors.
//!
//! Matrix text: a header line `n m` followed by `n` lines of `m` scalar
//! tokens. Blank lines and `#` comments are ignored. An inline form with rows
//! separated by `;` and no header is also accepted.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::SMatrix;
use crate::semiring::SScalar;
use crate::value::ValueGroup;

fn strip_comments(text: &str) -> Vec<&str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect()
}

/// Parses a matrix in header form, or in inline form when `;` occurs.
pub fn parse_matrix<G: ValueGroup>(text: &str) -> Result<SMatrix<G>> {
    if text.contains(';') {
        return parse_inline(text);
    }
    let lines = strip_comments(text);
    let Some((header, body)) = lines.split_first() else {
        return Err(Error::parse("empty matrix input"));
    };
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::parse(format!("bad header `{header}`"))))
        .collect::<Result<_>>()?;
    let (rows, cols) = match dims.as_slice() {
        [n] => (*n, *n),
        [n, m] => (*n, *m),
        _ => return Err(Error::parse(format!("bad header `{header}`"))),
    };
    if body.len() != rows {
        return Err(Error::parse(format!("expected {rows} rows, found {}", body.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, line) in body.iter().enumerate() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != cols {
            return Err(Error::parse(format!("row {} has {} entries, expected {cols}", i + 1, toks.len())));
        }
        for t in toks {
            data.push(SScalar::parse(t)?);
        }
    }
    SMatrix::new(rows, cols, data)
}

fn parse_inline<G: ValueGroup>(text: &str) -> Result<SMatrix<G>> {
    let rows = text
        .split(';')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| r.split_whitespace().map(SScalar::parse).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Err(Error::parse("empty matrix literal"));
    }
    SMatrix::from_rows(rows).map_err(|e| Error::parse(e.to_string()))
}

/// Header form with canonical tokens; inverse of [`parse_matrix`].
pub fn format_matrix<G: ValueGroup>(a: &SMatrix<G>) -> String {
    let mut out = format!("{} {}\n", a.rows(), a.cols());
    for i in 0..a.rows() {
        let row: Vec<String> = a.row(i).iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Right-aligned pretty table, one matrix row per line.
pub fn pretty_matrix<G: ValueGroup>(a: &SMatrix<G>, unicode: bool) -> String {
    let cells: Vec<Vec<String>> =
        (0..a.rows()).map(|i| a.row(i).iter().map(|x| x.pretty(unicode)).collect()).collect();
    let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for row in cells {
        let padded: Vec<String> = row
            .iter()
            .map(|c| format!("{}{c}", " ".repeat(width - c.chars().count())))
            .collect();
        out.push_str(&padded.join("  "));
        out.push('\n');
    }
    out
}

pub fn pretty_vector<G: ValueGroup>(v: &[SScalar<G>], unicode: bool) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.pretty(unicode)).collect();
    format!("({})", parts.join(", "))
}

pub fn parse_vector<G: ValueGroup>(text: &str) -> Result<Vec<SScalar<G>>> {
    let text = text.trim().trim_start_matches('(').trim_end_matches(')');
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(SScalar::parse)
        .collect()
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "G: ValueGroup")]
struct MatrixJson<G> {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<SScalar<G>>>,
}

pub fn matrix_to_json<G: ValueGroup>(a: &SMatrix<G>) -> serde_json::Value {
    serde_json::to_value(MatrixJson { rows: a.rows(), cols: a.cols(), entries: a.to_rows() })
        .expect("matrix serializes")
}

pub fn matrix_from_json<G: ValueGroup>(text: &str) -> Result<SMatrix<G>> {
    let m: MatrixJson<G> = serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
    if m.entries.len() != m.rows || m.entries.iter().any(|r| r.len() != m.cols) {
        return Err(Error::parse("entries do not match rows/cols"));
    }
    SMatrix::from_rows(m.entries).map_err(|e| Error::parse(e.to_string()))
}
