//! Instance files: one sequence per line, blank lines and `#` comments skipped.

use anyhow::{Context, Result};
use foldhard::solvers::DyckSeq;
use foldhard::{Error, Seq};

/// A non-blank line with its 1-based number.
pub struct Line<'a> {
    pub number: usize,
    pub text: &'a str,
}

pub fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| Line { number: i + 1, text: l.trim_end_matches('\r') })
        .filter(|l| !l.text.trim().is_empty() && !l.text.trim_start().starts_with('#'))
}

/// Moves a single-line parse error to `line`, shifting its column by `offset`.
fn relocate(e: Error, line: usize, offset: usize) -> Error {
    match e {
        Error::BadChar { column, found, .. } => Error::BadChar { line, column: column + offset, found },
        Error::Parse { message, .. } => Error::Parse { line, message },
        other => other,
    }
}

fn parse_at<T>(text: &str, line: usize, offset: usize) -> Result<T>
where
    T: std::str::FromStr<Err = Error>,
{
    Ok(text.parse::<T>().map_err(|e| relocate(e, line, offset))?)
}

pub fn rna_lines(text: &str) -> Result<Vec<(usize, Seq)>> {
    lines(text).map(|l| Ok((l.number, parse_at(l.text, l.number, 0)?))).collect()
}

pub fn dyck_lines(text: &str) -> Result<Vec<(usize, DyckSeq)>> {
    lines(text).map(|l| Ok((l.number, parse_at(l.text, l.number, 0)?))).collect()
}

/// `X,Y` pairs of binary strings.
pub fn lcs_lines(text: &str) -> Result<Vec<(usize, Seq, Seq)>> {
    lines(text)
        .map(|l| {
            let (x, y) = l.text.split_once(',').ok_or(Error::Parse {
                line: l.number,
                message: "expected two sequences separated by a comma".into(),
            })?;
            let xs: Seq = parse_at(x, l.number, 0)?;
            let ys: Seq = parse_at(y, l.number, x.len() + 1)?;
            xs.ensure_binary().with_context(|| format!("line {}: first sequence", l.number))?;
            ys.ensure_binary().with_context(|| format!("line {}: second sequence", l.number))?;
            Ok((l.number, xs, ys))
        })
        .collect()
}

pub fn read(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}
