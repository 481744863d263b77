//! Text encodings for graphs.
//!
//! * Edge list: a first line `n m`, then `m` lines `u v` with
//!   `0 <= u < v < n`, ASCII decimal, LF line endings. Edges may appear in
//!   any order but never twice; the writer emits them lexicographically.
//! * graph6: optional `>>graph6<<` header, the order in one byte (`n <= 62`)
//!   or as `~` plus 18 bits, then the upper triangle in column order packed
//!   big-endian six bits per byte with 63 added. Only the shortest order
//!   encoding and zero pad bits are accepted, so reading and writing
//!   round-trip byte for byte.
//!
//! Both parsers refuse orders above [`MAX_PARSE_ORDER`].

use super::{Graph, GraphError};
use thiserror::Error;

pub const GRAPH6_HEADER: &str = ">>graph6<<";

/// Largest order either parser will materialise.
pub const MAX_PARSE_ORDER: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input is empty")]
    Empty,
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("vertex list: {0}")]
    VertexList(String),
    #[error("order {0} exceeds the parser limit")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

fn edge_err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::EdgeList { line, message: message.into() }
}

fn decimal(token: &str, line: usize) -> Result<usize, ParseError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(edge_err(line, format!("expected a decimal number, found {token:?}")));
    }
    token
        .parse()
        .map_err(|_| edge_err(line, format!("number {token:?} does not fit")))
}

fn two_numbers(text: &str, line: usize) -> Result<(usize, usize), ParseError> {
    let mut it = text.split(' ');
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((decimal(a, line)?, decimal(b, line)?)),
        _ => Err(edge_err(line, "expected exactly two space-separated numbers")),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    if text.is_empty() {
        return Err(ParseError::Empty);
    }
    if text.contains('\r') {
        return Err(edge_err(0, "carriage returns are not allowed"));
    }
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n');
    let (n, m) = two_numbers(lines.next().unwrap_or(""), 1)?;
    if n > MAX_PARSE_ORDER {
        return Err(ParseError::TooLarge(n));
    }
    let mut g = Graph::empty(n);
    let mut count = 0;
    for (i, line) in lines.enumerate() {
        let lineno = i + 2;
        let (u, v) = two_numbers(line, lineno)?;
        if u >= v {
            return Err(edge_err(lineno, format!("edge {u} {v} must satisfy u < v")));
        }
        if v >= n {
            return Err(edge_err(lineno, format!("vertex {v} out of range for n = {n}")));
        }
        if g.has_edge(u, v) {
            return Err(edge_err(lineno, format!("duplicate edge {u} {v}")));
        }
        g.insert_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(edge_err(1, format!("header announces {m} edges, found {count}")));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Size prefix plus packed upper triangle, as raw graph6 bytes.
pub(crate) fn graph6_body(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<u8> {
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(adjacent(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

pub fn write_graph6(g: &Graph) -> String {
    let bytes = graph6_body(g.order(), |i, j| g.has_edge(i, j));
    String::from_utf8(bytes).expect("graph6 output is printable ASCII")
}

fn sixbits(b: u8) -> Result<u8, ParseError> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(ParseError::Graph6(format!("byte {b:#04x} outside the printable range 63..=126")))
    }
}

pub fn parse_graph6(input: &[u8]) -> Result<Graph, ParseError> {
    let data = input.strip_prefix(GRAPH6_HEADER.as_bytes()).unwrap_or(input);
    if data.is_empty() {
        return Err(ParseError::Empty);
    }
    let (n, rest) = match data {
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(ParseError::Graph6("truncated order".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..6] {
                n = (n << 6) | sixbits(b)? as usize;
            }
            if n <= 258_047 {
                return Err(ParseError::Graph6("order not in its shortest encoding".into()));
            }
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(ParseError::Graph6("truncated order".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = (n << 6) | sixbits(b)? as usize;
            }
            if n <= 62 {
                return Err(ParseError::Graph6("order not in its shortest encoding".into()));
            }
            (n, &rest[3..])
        }
        [b, rest @ ..] => (sixbits(*b)? as usize, rest),
        [] => unreachable!(),
    };
    if n > MAX_PARSE_ORDER {
        return Err(ParseError::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(ParseError::Graph6(format!(
            "expected {} data bytes for order {n}, found {}",
            bits.div_ceil(6),
            rest.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sixbits(rest[k / 6])?;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.insert_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = sixbits(rest[rest.len() - 1])?;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(ParseError::Graph6("non-zero padding bits".into()));
        }
    }
    Ok(g)
}

/// Guesses the format from content: a graph6 header or printable graph6
/// bytes select graph6, a first line of two decimals selects the edge list.
pub fn detect_format(input: &[u8]) -> Format {
    if input.starts_with(GRAPH6_HEADER.as_bytes()) {
        return Format::Graph6;
    }
    let first = input.split(|&b| b == b'\n').next().unwrap_or(&[]);
    if !first.is_empty() && first.iter().all(|&b| b.is_ascii_digit() || b == b' ') {
        Format::EdgeList
    } else {
        Format::Graph6
    }
}

/// Reads one graph from file contents in the given (or detected) format.
/// A single trailing newline after a graph6 string is accepted.
pub fn read_graph(input: &[u8], format: Option<Format>) -> Result<Graph, ParseError> {
    if input.is_empty() {
        return Err(ParseError::Empty);
    }
    match format.unwrap_or_else(|| detect_format(input)) {
        Format::EdgeList => {
            let text = std::str::from_utf8(input)
                .map_err(|_| edge_err(0, "input is not valid UTF-8"))?;
            parse_edge_list(text)
        }
        Format::Graph6 => {
            let body = input.strip_suffix(b"\n").unwrap_or(input);
            if body.contains(&b'\n') {
                return Err(ParseError::Graph6("expected a single graph".into()));
            }
            parse_graph6(body)
        }
    }
}

/// Whitespace-separated vertex indices, as used for cycle files.
pub fn parse_vertex_list(text: &str) -> Result<Vec<usize>, ParseError> {
    let vertices = text
        .split_ascii_whitespace()
        .map(|t| {
            if !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseError::VertexList(format!("not a vertex index: {t:?}")));
            }
            t.parse()
                .map_err(|_| ParseError::VertexList(format!("index {t:?} does not fit")))
        })
        .collect::<Result<Vec<usize>, _>>()?;
    if vertices.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(vertices)
}

pub fn write_vertex_list(vertices: &[usize]) -> String {
    let items: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
    items.join(" ")
}
