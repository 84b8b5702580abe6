//! Text formats: a plain edge list and graph6.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

/// Parses the edge-list format: the first non-blank line is the vertex
/// count, every following non-blank line is an edge `u v`. Lines starting
/// with `#` are comments. Duplicate edges are merged.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing vertex count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::parse(header_line, format!("bad vertex count {header:?}")))?;
    let mut g = Graph::empty(n).map_err(|e| Error::parse(header_line, e.to_string()))?;

    for (line, l) in lines {
        let mut it = l.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::parse(line, format!("expected `u v`, got {l:?}")));
        };
        let parse_id = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(line, format!("bad vertex id {s:?}")))
        };
        let (u, v) = (parse_id(a)?, parse_id(b)?);
        if u >= n || v >= n {
            return Err(Error::parse(
                line,
                format!("vertex id out of range 0..{n} in edge {u} {v}"),
            ));
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {u}")));
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// Writes the edge-list format accepted by [`parse_edge_list`].
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::parse(
            1,
            format!("byte {:#04x} at offset {pos} is not graph6", bytes[pos]),
        ));
    }

    let (n, body) = match bytes {
        [] => return Err(Error::parse(1, "empty graph6 string")),
        [126, 126, ..] => return Err(Error::parse(1, "graph6 order too large")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::parse(1, "truncated graph6 size header"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::parse(
            1,
            format!("graph6 order {n} exceeds {MAX_VERTICES}"),
        ));
    }

    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if body.len() != need {
        return Err(Error::parse(
            1,
            format!("graph6 body has {} bytes, expected {need}", body.len()),
        ));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph as graph6 (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
