//! Line-oriented text formats shared by graph, ideal and complex files.
//!
//! Every format starts with a header line `n <N>` followed by one record per
//! line of whitespace-separated decimal integers. `#` starts a comment.

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A non-blank line with its 1-based line number and tokens.
pub(crate) struct Record<'a> {
    pub line: usize,
    pub tokens: Vec<&'a str>,
}

pub(crate) fn records(text: &str) -> impl Iterator<Item = Record<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some(Record {
            line: i + 1,
            tokens,
        })
    })
}

/// Parse the `n <N>` header, returning `N` and the remaining records.
pub(crate) fn header(text: &str) -> Result<(usize, Vec<Record<'_>>)> {
    let mut recs = records(text);
    let first = recs.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `n <N>` header".into(),
    })?;
    let n = match first.tokens.as_slice() {
        ["n", v] => parse_usize(v, first.line)?,
        _ => {
            return Err(Error::Parse {
                line: first.line,
                msg: "expected `n <N>`".into(),
            })
        }
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Parse {
            line: first.line,
            msg: format!("vertex count must be in 1..={MAX_VERTICES}"),
        });
    }
    Ok((n, recs.collect()))
}

pub(crate) fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("`{tok}` is not a nonnegative integer"),
    })
}

/// Parse a record as a vertex set inside `1..=n`.
pub(crate) fn vertex_set(rec: &Record<'_>, n: usize) -> Result<VertexSet> {
    let mut s = VertexSet::EMPTY;
    for tok in &rec.tokens {
        let v = parse_usize(tok, rec.line)?;
        if v == 0 || v > n {
            return Err(Error::Parse {
                line: rec.line,
                msg: format!("vertex {v} outside 1..={n}"),
            });
        }
        s.insert(v);
    }
    Ok(s)
}

pub(crate) fn set_line(s: VertexSet) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
