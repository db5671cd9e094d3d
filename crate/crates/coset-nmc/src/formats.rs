//! Text formats for parity-check matrices: a dense `{0,1}`-grid format and
//! the MacKay alist format conventional for LDPC matrices.

use std::fmt::Write as _;

use crate::gf2::BitMatrix;
use crate::{Error, Result};

fn format_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format {
        at: line,
        msg: format!("line {line}: {}", msg.into()),
    }
}

/// Parses the dense format: a `"r n"` header line, then `r` lines of
/// exactly `n` characters from `{0,1}`. Coordinate 1 is the leftmost
/// character of each row.
pub fn parse_dense(text: &str) -> Result<BitMatrix> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| format_err(1, "empty input, expected \"r n\" header"))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    if dims.len() != 2 {
        return Err(format_err(1, "expected \"r n\" header"));
    }
    let rows: usize = dims[0]
        .parse()
        .map_err(|_| format_err(1, format!("bad row count {:?}", dims[0])))?;
    let cols: usize = dims[1]
        .parse()
        .map_err(|_| format_err(1, format!("bad column count {:?}", dims[1])))?;
    if rows == 0 || cols == 0 {
        return Err(format_err(1, "dimensions must be at least 1"));
    }

    let mut m = BitMatrix::zeros(rows, cols);
    for r in 0..rows {
        let (idx, line) = lines
            .next()
            .ok_or_else(|| format_err(r + 2, format!("expected {rows} rows, found {r}")))?;
        let line_no = idx + 1;
        let chars: Vec<char> = line.chars().collect();
        if chars.len() != cols {
            return Err(format_err(
                line_no,
                format!("expected {cols} characters, found {}", chars.len()),
            ));
        }
        for (c, ch) in chars.iter().enumerate() {
            match ch {
                '0' => {}
                '1' => m.set(r, c, true),
                _ => {
                    return Err(format_err(
                        line_no,
                        format!("expected '0' or '1', found {ch:?}"),
                    ))
                }
            }
        }
    }
    if let Some((idx, line)) = lines.next() {
        if !line.trim().is_empty() {
            return Err(format_err(idx + 1, "unexpected content after last row"));
        }
    }
    Ok(m)
}

pub fn to_dense_string(m: &BitMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let _ = writeln!(out, "{}", m.row(r));
    }
    out
}

/// Parses the MacKay alist format.
///
/// Layout: line 1 `"n r"` (columns then rows), line 2 the maximum column
/// and row degrees, line 3 the n column degrees, line 4 the r row degrees,
/// then one line of 1-based row indices per column and one line of 1-based
/// column indices per row. Zero entries are padding and are ignored.
pub fn parse_alist(text: &str) -> Result<BitMatrix> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let mut next_ints = |expect: &str| -> Result<(usize, Vec<usize>)> {
        let (idx, line) = lines
            .next()
            .ok_or_else(|| format_err(0, format!("unexpected end of file, expected {expect}")))?;
        let line_no = idx + 1;
        let ints = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| format_err(line_no, format!("bad integer {t:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        Ok((line_no, ints))
    };

    let (line_no, dims) = next_ints("\"n r\" header")?;
    if dims.len() != 2 {
        return Err(format_err(line_no, "expected \"n r\" header"));
    }
    let (cols, rows) = (dims[0], dims[1]);
    if rows == 0 || cols == 0 {
        return Err(format_err(line_no, "dimensions must be at least 1"));
    }

    let (line_no, max_degs) = next_ints("max degrees")?;
    if max_degs.len() != 2 {
        return Err(format_err(line_no, "expected max column and row degrees"));
    }

    let (line_no, col_degs) = next_ints("column degrees")?;
    if col_degs.len() != cols {
        return Err(format_err(
            line_no,
            format!("expected {cols} column degrees, found {}", col_degs.len()),
        ));
    }
    let (line_no, row_degs) = next_ints("row degrees")?;
    if row_degs.len() != rows {
        return Err(format_err(
            line_no,
            format!("expected {rows} row degrees, found {}", row_degs.len()),
        ));
    }

    let mut m = BitMatrix::zeros(rows, cols);
    for (c, &declared) in col_degs.iter().enumerate() {
        let (line_no, entries) = next_ints("column index list")?;
        let nonzero: Vec<usize> = entries.into_iter().filter(|&e| e != 0).collect();
        if nonzero.len() != declared {
            return Err(format_err(
                line_no,
                format!(
                    "column {} declares degree {declared} but lists {} indices",
                    c + 1,
                    nonzero.len()
                ),
            ));
        }
        for e in nonzero {
            if e > rows {
                return Err(format_err(line_no, format!("row index {e} out of range")));
            }
            if m.get(e - 1, c) {
                return Err(format_err(line_no, format!("duplicate row index {e}")));
            }
            m.set(e - 1, c, true);
        }
    }

    // The per-row lists are redundant; read them and cross-check.
    for r in 0..rows {
        let (line_no, entries) = next_ints("row index list")?;
        let mut nonzero: Vec<usize> = entries.into_iter().filter(|&e| e != 0).collect();
        nonzero.sort_unstable();
        let expected: Vec<usize> = m.row(r).support().iter().map(|&c| c + 1).collect();
        if nonzero != expected {
            return Err(format_err(
                line_no,
                format!("row {} index list disagrees with the column lists", r + 1),
            ));
        }
    }
    Ok(m)
}

pub fn to_alist_string(m: &BitMatrix) -> String {
    let (rows, cols) = (m.rows(), m.cols());
    let col_supports: Vec<Vec<usize>> = (0..cols).map(|c| m.column(c).support()).collect();
    let row_supports: Vec<Vec<usize>> = (0..rows).map(|r| m.row(r).support()).collect();
    let max_col = col_supports.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = row_supports.iter().map(Vec::len).max().unwrap_or(0);

    let mut out = format!("{cols} {rows}\n{max_col} {max_row}\n");
    let degrees = |supports: &[Vec<usize>]| {
        supports
            .iter()
            .map(|s| s.len().to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let _ = writeln!(out, "{}", degrees(&col_supports));
    let _ = writeln!(out, "{}", degrees(&row_supports));
    // Pad to at least one entry so an all-zero structure still writes a
    // visible "0" placeholder line rather than a blank one.
    let padded = |support: &[usize], width: usize| {
        (0..width.max(1))
            .map(|i| support.get(i).map_or(0, |&x| x + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    for s in &col_supports {
        let _ = writeln!(out, "{}", padded(s, max_col));
    }
    for s in &row_supports {
        let _ = writeln!(out, "{}", padded(s, max_row));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_parses_the_repetition_matrix() {
        let m = parse_dense("2 3\n110\n101\n").unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 3));
        assert_eq!(m.row(0).to_string(), "110");
        assert_eq!(m.row(1).to_string(), "101");
    }

    #[test]
    fn dense_reports_the_offending_line() {
        let err = parse_dense("2 3\n11\n101\n").unwrap_err();
        assert!(matches!(err, Error::Format { at: 2, .. }), "{err}");

        let err = parse_dense("2 3\n110\n1x1\n").unwrap_err();
        assert!(matches!(err, Error::Format { at: 3, .. }), "{err}");

        let err = parse_dense("junk\n").unwrap_err();
        assert!(matches!(err, Error::Format { at: 1, .. }), "{err}");
    }

    #[test]
    fn dense_round_trip() {
        let text = "3 7\n1010101\n0110011\n0001111\n";
        let m = parse_dense(text).unwrap();
        assert_eq!(to_dense_string(&m), text);
    }

    #[test]
    fn alist_agrees_with_dense_on_handwritten_input() {
        // The 2x3 repetition parity-check in both formats.
        let dense = parse_dense("2 3\n110\n101\n").unwrap();
        let alist = parse_alist("3 2\n2 2\n2 1 1\n2 2\n1 2\n1 0\n2 0\n1 2\n1 3\n").unwrap();
        assert_eq!(dense, alist);
    }

    #[test]
    fn alist_round_trip_through_writer() {
        let m = parse_dense("3 7\n1010101\n0110011\n0001111\n").unwrap();
        assert_eq!(parse_alist(&to_alist_string(&m)).unwrap(), m);
    }

    #[test]
    fn alist_rejects_inconsistent_row_lists() {
        // Row 1 claims support {1} but the column lists put a 1 at (1,2) too.
        let text = "3 2\n2 2\n2 1 1\n2 2\n1 2\n1 0\n2 0\n1 0\n1 3\n";
        let err = parse_alist(text).unwrap_err();
        assert!(matches!(err, Error::Format { .. }), "{err}");
    }

    #[test]
    fn alist_rejects_degree_mismatch() {
        let text = "3 2\n2 2\n2 1 1\n2 2\n1 0\n2 0\n1 2\n1 3\n";
        let err = parse_alist(text).unwrap_err();
        assert!(matches!(err, Error::Format { .. }), "{err}");
    }
}
