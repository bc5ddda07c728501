//! Graph text formats.
//!
//! Both forms open with `ramsey-graph v1 n=<n> form=<edges|bits>`.
//! The edges form lists each edge once as `u v` with u < v, ascending by
//! edge index. The bits form packs the C(n,2) edge bits into hex digits,
//! bit i of the string being the MSB-first bit i of the digit sequence
//! (so K3's three set bits print as "E").

use crate::error::{Error, Result};
use crate::graph::{binom2, edge_index, Graph};

/// Which body representation a graph file uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphForm {
    Edges,
    Bits,
}

impl GraphForm {
    pub fn as_str(&self) -> &'static str {
        match self {
            GraphForm::Edges => "edges",
            GraphForm::Bits => "bits",
        }
    }
}

impl std::str::FromStr for GraphForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edges" => Ok(GraphForm::Edges),
            "bits" => Ok(GraphForm::Bits),
            other => Err(Error::Parse(format!(
                "unknown graph form {other:?} (expected edges or bits)"
            ))),
        }
    }
}

/// Serializes a graph in the chosen form.
pub fn emit_graph(g: &Graph, form: GraphForm) -> String {
    let mut out = format!("ramsey-graph v1 n={} form={}\n", g.n(), form.as_str());
    match form {
        GraphForm::Edges => {
            for (u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
        }
        GraphForm::Bits => {
            let nbits = binom2(g.n());
            let bits = g.edge_bits();
            for digit_start in (0..nbits).step_by(4) {
                let mut digit = 0u32;
                for j in 0..4 {
                    // MSB-first inside each digit
                    if digit_start + j < nbits && bits.get(digit_start + j) {
                        digit |= 1 << (3 - j);
                    }
                }
                out.push(char::from_digit(digit, 16).unwrap().to_ascii_uppercase());
            }
            out.push('\n');
        }
    }
    out
}

/// Parses either graph form back into a [`Graph`].
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, form) = match fields.as_slice() {
        ["ramsey-graph", "v1", nf, ff] => {
            let n = nf
                .strip_prefix("n=")
                .and_then(|v| v.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("bad n field {nf:?}")))?;
            let form: GraphForm = ff
                .strip_prefix("form=")
                .ok_or_else(|| Error::Parse(format!("bad form field {ff:?}")))?
                .parse()?;
            (n, form)
        }
        _ => {
            return Err(Error::Parse(format!(
                "bad graph header {header:?} (expected 'ramsey-graph v1 n=<n> form=<edges|bits>')"
            )))
        }
    };
    match form {
        GraphForm::Edges => parse_edges_body(n, lines),
        GraphForm::Bits => parse_bits_body(n, lines),
    }
}

fn parse_edges_body<'a>(n: usize, lines: impl Iterator<Item = &'a str>) -> Result<Graph> {
    let mut g = Graph::empty(n);
    let mut last_index: Option<usize> = None;
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => {
                let u = a
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad vertex {a:?}")))?;
                let v = b
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad vertex {b:?}")))?;
                (u, v)
            }
            _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
        };
        if u >= v {
            return Err(Error::Parse(format!(
                "edge ({u}, {v}) must be written with u < v"
            )));
        }
        let idx = edge_index(u, v, n).map_err(|e| Error::Parse(e.to_string()))?;
        if let Some(prev) = last_index {
            if idx <= prev {
                return Err(Error::Parse(format!(
                    "edge ({u}, {v}) is out of order or duplicated"
                )));
            }
        }
        last_index = Some(idx);
        g.set_edge(u, v, true);
    }
    Ok(g)
}

fn parse_bits_body<'a>(n: usize, mut lines: impl Iterator<Item = &'a str>) -> Result<Graph> {
    let nbits = binom2(n);
    let expected_digits = nbits.div_ceil(4);
    let body = lines.next().unwrap_or("").trim();
    if body.len() != expected_digits {
        return Err(Error::Parse(format!(
            "bits body has {} hex digits, expected {expected_digits} for n={n}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    for (pos, ch) in body.chars().enumerate() {
        let digit = ch
            .to_digit(16)
            .ok_or_else(|| Error::Parse(format!("bad hex digit {ch:?}")))?;
        for j in 0..4 {
            let i = pos * 4 + j;
            let bit = digit >> (3 - j) & 1 == 1;
            if i < nbits {
                if bit {
                    let (u, v) = crate::graph::edge_from_index(i, n)?;
                    g.set_edge(u, v, true);
                }
            } else if bit {
                return Err(Error::Parse("padding bits past C(n,2) must be zero".into()));
            }
        }
    }
    for extra in lines {
        if !extra.trim().is_empty() {
            return Err(Error::Parse("trailing content after bits body".into()));
        }
    }
    Ok(g)
}
