//! graph6 and edge-list text formats.
//!
//! Only the short graph6 form is handled: one size byte `n + 63`, then the
//! upper triangle of the adjacency matrix in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, each byte offset by 63
//! and the final byte zero-padded.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 string.
///
/// ```
/// use chromlab::io::parse_graph6;
/// let k3 = parse_graph6("Bw").unwrap();
/// assert_eq!(k3.edge_count(), 3);
/// ```
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty string".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::Graph6(format!(
            "size byte {first:#04x} is outside the short form range"
        )));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} is out of range")));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj)
}

/// Encodes a graph as graph6; the inverse of [`parse_graph6`].
pub fn write_graph6(g: &Graph) -> String {
    encode_graph6(g.n(), |i, j| g.is_adjacent(i, j))
}

/// graph6 encoding of an arbitrary adjacency predicate on `n` vertices.
pub(crate) fn encode_graph6(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> String {
    let nbits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(adjacent(i, j));
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Reads a file of graph6 strings, one per line. Blank lines are skipped.
/// Errors carry the 1-based line number.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| e.at_line(i + 1)))
        .collect()
}

/// Parses the edge-list format: a first line holding `n`, then one
/// whitespace-separated `u v` pair per line, 0-based.
///
/// ```
/// use chromlab::io::parse_edge_list;
/// let p3 = parse_edge_list("3\n0 1\n1 2\n").unwrap();
/// assert_eq!(p3.diameter(), 2);
/// ```
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first_line, header) = lines
        .next()
        .ok_or_else(|| Error::EdgeList("missing vertex count".into()))?;
    let n: usize = header.parse().map_err(|_| {
        Error::EdgeList(format!("expected a vertex count, found {header:?}")).at_line(first_line)
    })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let pair = match fields.as_slice() {
            [u, v] => u.parse::<usize>().ok().zip(v.parse::<usize>().ok()),
            _ => None,
        };
        let (u, v) = pair.ok_or_else(|| {
            Error::EdgeList(format!("expected \"u v\", found {l:?}")).at_line(line)
        })?;
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n }.at_line(line));
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u).at_line(line));
        }
        edges.push((u, v));
    }
    Graph::new(n, edges)
}

/// Writes the edge-list format accepted by [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
