//! The line-oriented matroid file format.
//!
//! ```text
//! spm 1          bases 1
//! n 4            n 4
//! r 2            r 2
//! ch 0 3         b 0 1
//! ch 1 2         b 0 2
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Elements are 0-based
//! and strictly increasing within a line.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use sparse_paving::{ElementSet, ExplicitMatroid, MatroidError, SparsePavingMatroid};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FileError {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("invalid matroid: {0}")]
    Invalid(#[from] MatroidError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidFile {
    Sparse(SparsePavingMatroid),
    Explicit(ExplicitMatroid),
}

impl MatroidFile {
    pub fn n(&self) -> usize {
        match self {
            MatroidFile::Sparse(m) => m.n(),
            MatroidFile::Explicit(m) => m.n(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            MatroidFile::Sparse(m) => m.rank(),
            MatroidFile::Explicit(m) => m.rank(),
        }
    }
}

struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    col: s + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    /// Next meaningful line with its 1-based number.
    fn next(&mut self) -> Option<(usize, Vec<Token<'a>>)> {
        for (i, line) in self.inner.by_ref() {
            self.last = i + 1;
            let toks = tokens(line);
            if toks.first().is_some_and(|t| !t.text.starts_with('#')) {
                return Some((i + 1, toks));
            }
        }
        None
    }
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> FileError {
    FileError::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

fn number(line: usize, tok: &Token<'_>) -> Result<usize, FileError> {
    tok.text.parse().map_err(|_| {
        err(
            line,
            tok.col,
            format!("expected a non-negative integer, found `{}`", tok.text),
        )
    })
}

fn header_value(lines: &mut Lines<'_>, key: &str) -> Result<usize, FileError> {
    let Some((line, toks)) = lines.next() else {
        return Err(err(lines.last + 1, 1, format!("missing `{key}` line")));
    };
    if toks[0].text != key {
        return Err(err(
            line,
            toks[0].col,
            format!("expected `{key}`, found `{}`", toks[0].text),
        ));
    }
    match toks.as_slice() {
        [_, value] => number(line, value),
        [only] => Err(err(line, only.col + only.text.len(), format!("`{key}` needs a value"))),
        [_, _, extra, ..] => Err(err(line, extra.col, "unexpected trailing text")),
        [] => unreachable!("blank lines are skipped"),
    }
}

/// Parses and validates a matroid file.
pub fn parse_matroid(text: &str) -> Result<MatroidFile, FileError> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        last: 0,
    };
    let Some((line, toks)) = lines.next() else {
        return Err(err(1, 1, "empty file; expected `spm 1` or `bases 1`"));
    };
    let keyword = match (toks[0].text, toks.get(1).map(|t| t.text), toks.len()) {
        ("spm", Some("1"), 2) => "ch",
        ("bases", Some("1"), 2) => "b",
        _ => return Err(err(line, toks[0].col, "expected header `spm 1` or `bases 1`")),
    };
    let n = header_value(&mut lines, "n")?;
    let r = header_value(&mut lines, "r")?;
    let mut sets = Vec::new();
    let mut seen = BTreeSet::new();
    while let Some((line, toks)) = lines.next() {
        if toks[0].text != keyword {
            return Err(err(
                line,
                toks[0].col,
                format!("expected `{keyword}`, found `{}`", toks[0].text),
            ));
        }
        let elements = &toks[1..];
        if elements.len() != r {
            let col = elements
                .get(r)
                .map_or(toks.last().map_or(1, |t| t.col + t.text.len()), |t| t.col);
            return Err(err(
                line,
                col,
                format!("expected {r} elements, found {}", elements.len()),
            ));
        }
        let mut set = ElementSet::EMPTY;
        let mut prev = None;
        for tok in elements {
            let e = number(line, tok)?;
            if e >= n {
                return Err(err(
                    line,
                    tok.col,
                    format!("element {e} is outside the ground set of size {n}"),
                ));
            }
            if prev.is_some_and(|p| p >= e) {
                return Err(err(line, tok.col, "elements must be strictly increasing"));
            }
            prev = Some(e);
            set = set.with(e);
        }
        if !seen.insert(set.to_vec()) {
            return Err(err(line, toks[0].col, format!("duplicate line for {set}")));
        }
        sets.push(set);
    }
    if keyword == "ch" {
        Ok(MatroidFile::Sparse(SparsePavingMatroid::new(n, r, sets)?))
    } else {
        Ok(MatroidFile::Explicit(ExplicitMatroid::new(n, sets)?))
    }
}

fn write_body(out: &mut String, keyword: &str, sets: &[ElementSet]) {
    let mut lists: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
    lists.sort();
    for list in lists {
        out.push_str(keyword);
        for e in list {
            let _ = write!(out, " {e}");
        }
        out.push('\n');
    }
}

/// Canonical text: body lines sorted lexicographically by element list.
pub fn serialize(file: &MatroidFile) -> String {
    let mut out = String::new();
    match file {
        MatroidFile::Sparse(m) => {
            let _ = write!(out, "spm 1\nn {}\nr {}\n", m.n(), m.rank());
            write_body(&mut out, "ch", m.circuit_hyperplanes());
        }
        MatroidFile::Explicit(m) => {
            let _ = write!(out, "bases 1\nn {}\nr {}\n", m.n(), m.rank());
            write_body(&mut out, "b", m.basis_list());
        }
    }
    out
}

pub fn serialize_sparse(m: &SparsePavingMatroid) -> String {
    serialize(&MatroidFile::Sparse(m.clone()))
}

/// Parses `"0,1,3"` (or `-`/empty for the empty set) over a ground set of size `n`.
pub fn parse_set(text: &str, n: usize) -> Result<ElementSet, String> {
    let text = text.trim();
    if text.is_empty() || text == "-" {
        return Ok(ElementSet::EMPTY);
    }
    let mut set = ElementSet::EMPTY;
    for part in text.split(',') {
        let e: usize = part
            .trim()
            .parse()
            .map_err(|_| format!("`{}` is not an element", part.trim()))?;
        if e >= n {
            return Err(format!("element {e} is outside the ground set of size {n}"));
        }
        if set.contains(e) {
            return Err(format!("element {e} is repeated"));
        }
        set = set.with(e);
    }
    Ok(set)
}

/// Parses a `sep`-separated list of sets.
pub fn parse_sets(text: &str, sep: char, n: usize) -> Result<Vec<ElementSet>, String> {
    text.split(sep).map(|part| parse_set(part, n)).collect()
}

/// `0,1,3`, or `-` for the empty set.
pub fn set_token(set: ElementSet) -> String {
    if set.is_empty() {
        return "-".to_string();
    }
    set.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}
