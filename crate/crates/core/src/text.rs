//! The Cayley-table text format.
//!
//! ```text
//! # optional comment lines; the first one becomes the table label
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```
//!
//! Row `i`, column `j` holds `i·j`. Blank lines and trailing whitespace are
//! ignored. [`emit`] writes the canonical form (single spaces, `\n` line
//! endings), which [`parse`] reads back to an equal table.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::table::{self, LoopTable};

/// Parses the integer grid without any loop validation.
pub fn parse_grid(input: &str) -> Result<(Option<String>, Vec<Vec<usize>>)> {
    let mut label = None;
    let mut order: Option<usize> = None;
    let mut rows = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if label.is_none() && order.is_none() {
                label = Some(comment.trim().to_string());
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        last_line = line_no;
        let Some(n) = order else {
            let n = line.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("expected the table order, found '{line}'"),
            })?;
            if n == 0 {
                return Err(Error::Parse { line: line_no, message: "order must be positive".into() });
            }
            if n > table::MAX_ORDER {
                return Err(Error::OrderTooLarge { order: n, max: table::MAX_ORDER });
            }
            order = Some(n);
            continue;
        };
        if rows.len() == n {
            return Err(Error::Parse { line: line_no, message: format!("more than {n} rows") });
        }
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse { line: line_no, message: format!("non-integer entry in '{line}'") })?;
        if row.len() != n {
            return Err(Error::Parse {
                line: line_no,
                message: format!("row has {} entries, expected {n}", row.len()),
            });
        }
        if let Some(j) = row.iter().position(|&v| v >= n) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("entry {} in column {j} is out of range 0..{n}", row[j]),
            });
        }
        rows.push(row);
    }

    match order {
        None => Err(Error::Parse { line: last_line.max(1), message: "missing table order".into() }),
        Some(n) if rows.len() != n => Err(Error::Parse {
            line: last_line,
            message: format!("expected {n} rows, found {}", rows.len()),
        }),
        Some(_) => Ok((label, rows)),
    }
}

/// Parses and validates a loop.
pub fn parse(input: &str) -> Result<LoopTable> {
    let (label, rows) = parse_grid(input)?;
    let t = LoopTable::from_rows(&rows)?;
    Ok(match label {
        Some(l) if !l.is_empty() => t.with_label(l),
        _ => t,
    })
}

/// Canonical text of an arbitrary square grid.
pub fn emit_grid(label: Option<&str>, rows: &[Vec<usize>]) -> String {
    let mut out = String::new();
    if let Some(l) = label {
        writeln!(out, "# {l}").unwrap();
    }
    writeln!(out, "{}", rows.len()).unwrap();
    for row in rows {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

pub fn emit(table: &LoopTable) -> String {
    emit_grid(table.label(), &table.rows())
}

/// Single-line form used inside key=value records: rows separated by `/`.
pub fn emit_inline(table: &LoopTable) -> String {
    let rows: Vec<String> = table
        .rows()
        .iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("{}/{}", table.order(), rows.join("/"))
}

pub fn parse_inline(s: &str) -> Result<LoopTable> {
    parse(&s.replace('/', "\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::cyclic;

    #[test]
    fn parses_with_comments_and_whitespace() {
        let t = parse("# Z3\n# more\n3\n0 1 2  \n1 2 0\n\n2 0 1\n").unwrap();
        assert_eq!(t, cyclic(3));
        assert_eq!(t.label(), Some("Z3"));
    }

    #[test]
    fn emits_canonical_text() {
        let z3 = cyclic(3);
        assert_eq!(emit(&z3), "# Z3\n3\n0 1 2\n1 2 0\n2 0 1\n");
        assert_eq!(emit(&parse(&emit(&z3)).unwrap()), emit(&z3));
        assert_eq!(parse_inline(&emit_inline(&z3)).unwrap(), z3);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse("# c\n3\n0 1 2\n1 2\n2 0 1\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 4, message: "row has 2 entries, expected 3".into() });
        assert!(matches!(parse("x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("2\n0 1\n1 7\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(parse("2\n0 1\n0 1\n"), Err(Error::NotLatin { .. })));
    }
}
