//! Text and JSON forms of matrices.
//!
//! Text: one row per nonblank line, whitespace-separated tokens, `E` for `ε`.
//! JSON: `{"rows":m,"cols":n,"entries":[[...]]}` with `ε` as the string `"E"`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::semiring::TropicalScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "text" => Ok(Self::Text),
            "json" => Ok(Self::Json),
            other => Err(format!("unknown format {other:?} (expected text or json)")),
        }
    }
}

/// Parses the whitespace-separated text form.
///
/// Blank lines are skipped, so trailing newlines and CRLF endings are accepted.
pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let mut entries = Vec::new();
    let mut cols = None;
    let mut rows = 0;
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let before = entries.len();
        for token in line.split_whitespace() {
            let value = token
                .parse::<TropicalScalar>()
                .map_err(|_| Error::BadToken {
                    line: line_no,
                    token: token.to_owned(),
                })?;
            entries.push(value);
        }
        let found = entries.len() - before;
        if found == 0 {
            continue;
        }
        match cols {
            None => cols = Some(found),
            Some(expected) if expected != found => {
                return Err(Error::RaggedRows {
                    line: line_no,
                    expected,
                    found,
                })
            }
            Some(_) => {}
        }
        rows += 1;
    }
    match cols {
        Some(cols) => Matrix::from_vec(rows, cols, entries),
        None => Err(Error::Empty),
    }
}

#[derive(Serialize, Deserialize)]
struct JsonMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<TropicalScalar>>,
}

impl From<&Matrix> for JsonMatrix {
    fn from(m: &Matrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.row_iter().map(<[_]>::to_vec).collect(),
        }
    }
}

/// Parses the JSON form; `rows`/`cols` must agree with `entries`.
pub fn parse_matrix_json(text: &str) -> Result<Matrix> {
    let doc: JsonMatrix = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let m = Matrix::from_rows(doc.entries)?;
    if m.shape() != (doc.rows, doc.cols) {
        return Err(Error::Json(format!(
            "declared {}x{} but entries are {}x{}",
            doc.rows,
            doc.cols,
            m.rows(),
            m.cols()
        )));
    }
    Ok(m)
}

/// Text form with each column right-aligned to its widest token. No trailing newline.
pub fn print_text(m: &Matrix) -> String {
    let cells: Vec<String> = m.entries().iter().map(ToString::to_string).collect();
    let widths: Vec<usize> = (0..m.cols())
        .map(|j| {
            (0..m.rows())
                .map(|i| cells[i * m.cols() + j].len())
                .max()
                .unwrap_or(1)
        })
        .collect();
    let mut out = String::new();
    for (i, row) in cells.chunks_exact(m.cols()).enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for (j, cell) in row.iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            out.push_str(&format!("{cell:>width$}", width = widths[j]));
        }
    }
    out
}

/// Compact JSON form.
pub fn print_json(m: &Matrix) -> String {
    serde_json::to_string(&JsonMatrix::from(m)).expect("matrix serialization cannot fail")
}

/// JSON value form, for embedding in larger documents.
pub fn to_json_value(m: &Matrix) -> serde_json::Value {
    serde_json::to_value(JsonMatrix::from(m)).expect("matrix serialization cannot fail")
}

pub fn print_matrix(m: &Matrix, format: Format) -> String {
    match format {
        Format::Text => print_text(m),
        Format::Json => print_json(m),
    }
}

/// A parsed matrix together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixDocument {
    pub matrix: Matrix,
    pub source_name: Option<String>,
}

impl MatrixDocument {
    /// Parses either form: input whose first non-whitespace character is `{`
    /// is read as JSON, anything else as text.
    pub fn parse(text: &str, source_name: Option<String>) -> Result<Self> {
        let matrix = if text.trim_start().starts_with('{') {
            parse_matrix_json(text)?
        } else {
            parse_matrix(text)?
        };
        Ok(Self {
            matrix,
            source_name,
        })
    }
}

impl FromStr for Matrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_matrix(s)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_text(self))
    }
}
