//! The line-oriented graph format.
//!
//! ```text
//! # comment
//! p 4            header: vertex count
//! e 1 2          edge, 1-indexed
//! w 1 1 2 1      optional vertex weights
//! l a b c d      optional vertex names
//! ```
//!
//! Without a `p` header, edge endpoints are free-form names and vertices are
//! numbered in order of first appearance.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write;

use edgesat::{GraphError, WeightedGraph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("vertex {index} out of range 1..={n}")]
    OutOfRange { index: i64, n: usize },
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),
    #[error("self-loop at {0}")]
    SelfLoop(String),
    #[error("nonpositive weight {0}")]
    NonPositiveWeight(i64),
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("{0} given twice")]
    Repeated(&'static str),
    #[error("header must come before edges")]
    LateHeader,
}

/// A parsed graph file. Edges are 0-based and stored in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub weights: Option<Vec<u32>>,
    pub labels: Option<Vec<String>>,
}

impl GraphDocument {
    pub fn from_graph(g: &WeightedGraph) -> Self {
        GraphDocument {
            n: g.n(),
            edges: g.edges(),
            weights: (!g.is_simple()).then(|| g.weights().to_vec()),
            labels: None,
        }
    }

    pub fn to_graph(&self) -> Result<WeightedGraph, GraphError> {
        match &self.weights {
            Some(w) => WeightedGraph::from_edges(self.n, &self.edges, w),
            None => WeightedGraph::simple(self.n, &self.edges),
        }
    }

    /// Display name of vertex `v`: its label, or its 1-based index.
    pub fn name(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => (v + 1).to_string(),
        }
    }
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn int(tok: &str, line: usize) -> Result<i64, ParseError> {
    tok.parse().map_err(|_| {
        err(
            line,
            ParseErrorKind::Malformed(format!("expected an integer, found {tok:?}")),
        )
    })
}

pub fn parse_graph(input: &str) -> Result<GraphDocument, ParseError> {
    let mut n: Option<usize> = None;
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut weights: Option<(usize, Vec<i64>)> = None;
    let mut labels: Option<(usize, Vec<String>)> = None;

    for (k, raw) in input.lines().enumerate() {
        let line = k + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        let mut toks = text.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        let rest: Vec<&str> = toks.collect();
        match tag {
            "p" => {
                if n.is_some() {
                    return Err(err(line, ParseErrorKind::Repeated("header")));
                }
                if !edges.is_empty() {
                    return Err(err(line, ParseErrorKind::LateHeader));
                }
                let [count] = rest[..] else {
                    return Err(err(line, ParseErrorKind::Malformed("expected `p <n>`".into())));
                };
                let count = int(count, line)?;
                if count < 0 {
                    return Err(err(line, ParseErrorKind::Malformed("negative vertex count".into())));
                }
                n = Some(count as usize);
            }
            "e" => {
                let [a, b] = rest[..] else {
                    return Err(err(line, ParseErrorKind::Malformed("expected `e <u> <v>`".into())));
                };
                let mut vertex = |tok: &str| -> Result<usize, ParseError> {
                    match n {
                        Some(n) => {
                            let i = int(tok, line)?;
                            if i < 1 || i as usize > n {
                                return Err(err(line, ParseErrorKind::OutOfRange { index: i, n }));
                            }
                            Ok(i as usize - 1)
                        }
                        None => Ok(*index.entry(tok.to_string()).or_insert_with(|| {
                            names.push(tok.to_string());
                            names.len() - 1
                        })),
                    }
                };
                let (u, v) = (vertex(a)?, vertex(b)?);
                if u == v {
                    return Err(err(line, ParseErrorKind::SelfLoop(a.to_string())));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(err(line, ParseErrorKind::DuplicateEdge(a.to_string(), b.to_string())));
                }
                edges.push((u, v));
            }
            "w" => {
                if weights.is_some() {
                    return Err(err(line, ParseErrorKind::Repeated("weight line")));
                }
                let w = rest.iter().map(|t| int(t, line)).collect::<Result<Vec<_>, _>>()?;
                if let Some(&bad) = w.iter().find(|&&x| x <= 0) {
                    return Err(err(line, ParseErrorKind::NonPositiveWeight(bad)));
                }
                if w.iter().any(|&x| x > u32::MAX as i64) {
                    return Err(err(line, ParseErrorKind::Malformed("weight too large".into())));
                }
                weights = Some((line, w));
            }
            "l" => {
                if labels.is_some() {
                    return Err(err(line, ParseErrorKind::Repeated("label line")));
                }
                labels = Some((line, rest.iter().map(|s| s.to_string()).collect()));
            }
            other => {
                return Err(err(
                    line,
                    ParseErrorKind::Malformed(format!("unknown line type {other:?}")),
                ));
            }
        }
    }

    let headerless = n.is_none();
    let n = n.unwrap_or(names.len());
    let weights = match weights {
        Some((line, w)) if w.len() != n => {
            return Err(err(
                line,
                ParseErrorKind::WeightCount {
                    expected: n,
                    got: w.len(),
                },
            ));
        }
        Some((_, w)) => Some(w.into_iter().map(|x| x as u32).collect()),
        None => None,
    };
    let labels = match labels {
        Some((line, l)) if l.len() != n => {
            return Err(err(
                line,
                ParseErrorKind::LabelCount {
                    expected: n,
                    got: l.len(),
                },
            ));
        }
        Some((_, l)) => Some(l),
        None if headerless => Some(names),
        None => None,
    };
    Ok(GraphDocument {
        n,
        edges,
        weights,
        labels,
    })
}

/// Writes a document in the format [`parse_graph`] reads, always with a
/// header.
pub fn serialize(doc: &GraphDocument) -> String {
    let mut out = String::new();
    writeln!(out, "p {}", doc.n).unwrap();
    for &(u, v) in &doc.edges {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    if let Some(w) = &doc.weights {
        let w: Vec<String> = w.iter().map(|x| x.to_string()).collect();
        writeln!(out, "w {}", w.join(" ")).unwrap();
    }
    if let Some(l) = &doc.labels {
        writeln!(out, "l {}", l.join(" ")).unwrap();
    }
    out
}
