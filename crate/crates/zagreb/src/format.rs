//! Text formats: degree sequences, edge lists and DOT.
//!
//! Sequences are comma separated and accept run lengths, so `4^5,1^8` is
//! five 4s followed by eight 1s. Edge lists start with a header `n m` and
//! carry one `u v` line per edge with 1-based labels. Serialized edge lists
//! put the smaller endpoint first and sort lines lexicographically.

use std::fmt::Write as _;

use thiserror::Error;
use zagreb_core::{DegreeSequence, GraphError, SequenceError, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("empty input")]
    Empty,
    #[error("line {line}: label {label} out of range 1..={n}")]
    LabelOutOfRange { line: usize, label: usize, n: usize },
    #[error("line {line}: loop at vertex {label}")]
    Loop { line: usize, label: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header declares {declared} edges, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
}

/// Error from parsing a sequence: either the text is malformed or the
/// numbers do not form a valid sequence.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceParseError {
    #[error("cannot parse sequence: {0}")]
    Syntax(String),
    #[error(transparent)]
    Invalid(#[from] SequenceError),
}

pub fn parse_degrees(text: &str) -> Result<Vec<u32>, SequenceParseError> {
    let text = text.trim();
    let text = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(text);
    if text.is_empty() {
        return Err(SequenceParseError::Syntax("empty sequence".into()));
    }
    let mut out = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let bad = || SequenceParseError::Syntax(format!("bad entry {token:?}"));
        let (value, count) = match token.split_once('^') {
            Some((v, k)) => {
                (v.trim().parse::<u32>().map_err(|_| bad())?, k.trim().parse::<usize>().map_err(|_| bad())?)
            }
            None => (token.parse::<u32>().map_err(|_| bad())?, 1),
        };
        out.extend(std::iter::repeat_n(value, count));
    }
    Ok(out)
}

pub fn parse_sequence(text: &str) -> Result<DegreeSequence, SequenceParseError> {
    Ok(DegreeSequence::new(parse_degrees(text)?)?)
}

pub fn format_sequence(seq: &DegreeSequence) -> String {
    seq.to_string()
}

/// Run-length form, e.g. `4^5,1^8`. Runs of length one are written bare.
pub fn format_sequence_compact(seq: &DegreeSequence) -> String {
    seq.multiplicities()
        .iter()
        .map(|&(d, k)| if k == 1 { d.to_string() } else { format!("{d}^{k}") })
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), FormatError> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| {
        it.next()
            .ok_or_else(|| FormatError::Syntax { line: lineno, msg: format!("missing {what}") })?
            .parse::<usize>()
            .map_err(|e| FormatError::Syntax { line: lineno, msg: format!("{what}: {e}") })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(FormatError::Syntax { line: lineno, msg: "expected two fields".into() });
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(FormatError::Empty)?;
    let (n, m) = parse_pair(header, hline)?;
    let mut g = SimpleGraph::new(n);
    let mut found = 0;
    for (lineno, line) in lines {
        let (u, v) = parse_pair(line, lineno)?;
        for label in [u, v] {
            if label == 0 || label > n {
                return Err(FormatError::LabelOutOfRange { line: lineno, label, n });
            }
        }
        match g.add_edge(u - 1, v - 1) {
            Ok(()) => {}
            Err(GraphError::SelfLoop(_)) => return Err(FormatError::Loop { line: lineno, label: u }),
            Err(_) => return Err(FormatError::DuplicateEdge { line: lineno, u: u.min(v), v: u.max(v) }),
        }
        found += 1;
    }
    if found != m {
        return Err(FormatError::EdgeCountMismatch { declared: m, found });
    }
    Ok(g)
}

pub fn serialize_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

pub fn to_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "  {} [label=\"{}\"];", v + 1, g.degree(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", u + 1, v + 1);
    }
    out.push_str("}\n");
    out
}

/// 1-based edge pairs for JSON output.
pub fn edges_one_based(g: &SimpleGraph) -> Vec<[usize; 2]> {
    g.edges().map(|(u, v)| [u + 1, v + 1]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_lengths_expand() {
        assert_eq!(parse_degrees("4^5,1^8").unwrap(), [vec![4; 5], vec![1; 8]].concat());
        assert_eq!(parse_degrees(" (4, 4,3) ").unwrap(), vec![4, 4, 3]);
        assert_eq!(parse_degrees("2^0,1^2").unwrap(), vec![1, 1]);
        assert!(parse_degrees("4,,3").is_err());
        assert!(parse_degrees("4^x").is_err());
        assert!(parse_degrees("").is_err());
    }

    #[test]
    fn compact_form() {
        let seq = parse_sequence("1^8,4^5").unwrap();
        assert_eq!(format_sequence_compact(&seq), "4^5,1^8");
        assert_eq!(format_sequence(&seq), "4,4,4,4,4,1,1,1,1,1,1,1,1");
    }
}
