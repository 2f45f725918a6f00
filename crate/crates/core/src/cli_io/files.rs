use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::summability::{SummabilityMatrix, WeightSequence};

/// A parsed matrix file with any non-fatal warnings.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixFile {
    pub matrix: SummabilityMatrix,
    pub warnings: Vec<String>,
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Line-per-row text: row n holds n + 1 whitespace-separated decimals.
/// Everything after '#' is ignored, as are blank lines.
pub fn parse_matrix(label: &str, text: &str) -> Result<MatrixFile> {
    let mut rows = Vec::new();
    let mut warnings = Vec::new();
    for line in text.lines() {
        let body = strip_comment(line);
        if body.is_empty() {
            continue;
        }
        let n = rows.len();
        let row = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| Error::Parse {
                        row: n,
                        message: format!("'{tok}' is not a decimal number"),
                    })
            })
            .collect::<Result<Vec<f64>>>()?;
        if row.len() != n + 1 {
            return Err(Error::Parse {
                row: n,
                message: format!(
                    "row {n} must contain {} entries, found {}",
                    n + 1,
                    row.len()
                ),
            });
        }
        if let Some(k) = row.iter().position(|&v| v < 0.0) {
            warnings.push(format!("row {n} has a negative entry at column {k}"));
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            row: 0,
            message: "matrix file contains no rows".into(),
        });
    }
    Ok(MatrixFile {
        matrix: SummabilityMatrix::from_rows(label, rows)?,
        warnings,
    })
}

pub fn matrix_from_file(path: &Path) -> Result<MatrixFile> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_matrix(&format!("file:{}", path.display()), &text)
}

/// Whitespace-separated p_0, p_1, …; '#' starts a comment.
pub fn parse_weights(label: &str, text: &str) -> Result<WeightSequence> {
    let mut p = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        for tok in strip_comment(line).split_whitespace() {
            let v = tok.parse::<f64>().map_err(|_| Error::Parse {
                row: line_no,
                message: format!("'{tok}' is not a decimal number"),
            })?;
            p.push(v);
        }
    }
    WeightSequence::new(label, p)
}
