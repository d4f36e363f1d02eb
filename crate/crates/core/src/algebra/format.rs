//! Cayley-table text format.
//!
//! ```text
//! # comment lines start with '#'
//! 2
//! 0 1
//! 1 0
//! names: e a
//! ```
//!
//! The first non-comment line is the element count, followed by one row per
//! element. An optional trailing `names:` line labels the elements.

use crate::error::{Error, Result};

use super::FiniteSemigroup;

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a line into tokens with their 1-based starting columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| {
        let offset = tok.as_ptr() as usize - line.as_ptr() as usize;
        (line[..offset].chars().count() + 1, tok)
    })
}

pub fn parse_semigroup(text: &str) -> Result<FiniteSemigroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty());

    let (size_line, size_text) = lines.next().ok_or_else(|| syntax(1, 1, "missing element count"))?;
    let mut size_tokens = tokens(size_text);
    let (col, tok) = size_tokens
        .next()
        .ok_or_else(|| syntax(size_line, 1, "missing element count"))?;
    let n: usize = tok
        .parse()
        .map_err(|_| syntax(size_line, col, format!("expected element count, found {tok:?}")))?;
    if let Some((col, tok)) = size_tokens.next() {
        return Err(syntax(
            size_line,
            col,
            format!("unexpected {tok:?} after element count"),
        ));
    }
    if n == 0 {
        return Err(Error::Empty);
    }

    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| syntax(size_line + r + 1, 1, format!("missing row {r}")))?;
        let mut row = Vec::with_capacity(n);
        let mut last_col = 1;
        for (col, tok) in tokens(line) {
            last_col = col;
            let v: usize = tok
                .parse()
                .map_err(|_| syntax(line_no, col, format!("expected an index, found {tok:?}")))?;
            if row.len() == n {
                return Err(syntax(line_no, col, format!("row {r} has more than {n} entries")));
            }
            if v >= n {
                return Err(Error::OutOfRange {
                    row: r,
                    column: row.len(),
                    value: v,
                    n,
                });
            }
            row.push(v);
        }
        if row.len() < n {
            return Err(syntax(
                line_no,
                last_col,
                format!("row {r} has {} entries, expected {n}", row.len()),
            ));
        }
        rows.push(row);
    }

    let mut labels = None;
    if let Some((line_no, line)) = lines.next() {
        let rest = line
            .trim_start()
            .strip_prefix("names:")
            .ok_or_else(|| syntax(line_no, 1, "expected a `names:` line or end of input"))?;
        let names: Vec<String> = rest.split_whitespace().map(str::to_owned).collect();
        if names.len() != n {
            return Err(syntax(line_no, 1, format!("{} names for {n} elements", names.len())));
        }
        labels = Some(names);
        if let Some((line_no, _)) = lines.next() {
            return Err(syntax(line_no, 1, "unexpected content after `names:` line"));
        }
    }

    let s = FiniteSemigroup::new(rows)?;
    match labels {
        Some(l) => s.with_labels(l),
        None => Ok(s),
    }
}

impl FiniteSemigroup {
    /// Canonical serialization: no comments, single spaces, newline-terminated rows.
    pub fn to_cayley(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.len().to_string());
        out.push('\n');
        for a in self.elements() {
            let row: Vec<String> = self.row(a).map(|v| v.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        if let Some(labels) = self.labels() {
            out.push_str("names: ");
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
        out
    }
}

impl std::str::FromStr for FiniteSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_semigroup(s)
    }
}
