//! graph6 and plain edge-list text formats.

use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

fn parse_error(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse { line, message: message.into() }
}

/// Encodes `g` in graph6: `N(n)` followed by the upper triangle in
/// column-major order, six bits per printable byte, zero padded.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + 63) as char);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    out
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    parse_graph6_line(text, 1)
}

fn parse_graph6_line(text: &str, line: usize) -> Result<Graph, GraphError> {
    let body = text.trim();
    let body = body.strip_prefix(HEADER).unwrap_or(body);
    let mut values = Vec::with_capacity(body.len());
    for (pos, b) in body.bytes().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_error(line, format!("byte {b:#04x} at offset {pos} is not graph6")));
        }
        values.push(b - 63);
    }
    let (n, rest) = match values.as_slice() {
        [] => return Err(parse_error(line, "empty graph6 string")),
        [63, 63, rest @ ..] if rest.len() >= 6 => {
            (rest[..6].iter().fold(0usize, |acc, &v| acc << 6 | v as usize), &rest[6..])
        }
        [63, rest @ ..] if rest.len() >= 3 && rest[0] != 63 => {
            (rest[..3].iter().fold(0usize, |acc, &v| acc << 6 | v as usize), &rest[3..])
        }
        [63, ..] => return Err(parse_error(line, "truncated vertex count")),
        [first, rest @ ..] => (*first as usize, rest),
    };
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if rest.len() != expected {
        return Err(parse_error(line, format!("{n} vertices need {expected} payload bytes, found {}", rest.len())));
    }
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if rest[pos / 6] >> (5 - pos % 6) & 1 == 1 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    if bit_count % 6 != 0 && rest[rest.len() - 1] & ((1 << (6 - bit_count % 6)) - 1) != 0 {
        return Err(parse_error(line, "non-zero padding bits"));
    }
    Graph::new(n, &edges).map_err(|e| parse_error(line, e.to_string()))
}

/// Parses a corpus with one graph6 string per line; blank lines are skipped.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, GraphError> {
    text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()).map(|(i, l)| parse_graph6_line(l, i + 1)).collect()
}

/// Edge list: optional `n <count>` header, then one `u v` pair per line.
/// `#` starts a comment. Without a header the vertex count is one more than
/// the largest index mentioned.
pub fn parse_edgelist(text: &str) -> Result<Graph, GraphError> {
    let mut declared: Option<usize> = None;
    let mut seen_pair = false;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let number =
            |s: &str| s.parse::<usize>().map_err(|_| parse_error(line, format!("`{s}` is not a vertex index")));
        match fields.as_slice() {
            ["n", count] if declared.is_none() && !seen_pair => declared = Some(number(count)?),
            [u, v] => {
                edges.push((number(u)?, number(v)?));
                seen_pair = true;
            }
            _ => return Err(parse_error(line, format!("expected `u v`, got `{content}`"))),
        }
    }
    let n = match declared {
        Some(n) => n,
        None => {
            edges.iter().map(|&(u, v)| u.max(v) + 1).max().ok_or_else(|| parse_error(0, "no header and no edges"))?
        }
    };
    Graph::new(n, &edges).map_err(|e| parse_error(0, e.to_string()))
}

/// Writes the header line followed by the sorted edges.
pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
