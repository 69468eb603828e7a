use std::collections::HashMap;

use super::{Graph, GraphError};

/// Largest vertex count representable with the single-byte graph6 header.
pub const GRAPH6_MAX_N: usize = 62;

const HEADER: &[u8] = b">>graph6<<";

/// Parses one graph6 record. Surrounding whitespace and the optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, GraphError> {
    let mut bytes = trim_ascii(text);
    if let Some(rest) = bytes.strip_prefix(HEADER) {
        bytes = rest;
    }
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| GraphError::MalformedGraph6("empty input".into()))?;
    if first == 126 {
        return Err(GraphError::UnsupportedSize(extended_size(body)));
    }
    if !(63..=126).contains(&first) {
        return Err(GraphError::MalformedGraph6(format!(
            "size byte {first} outside 63..=126"
        )));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(GraphError::MalformedGraph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut groups = Vec::with_capacity(body.len());
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphError::MalformedGraph6(format!(
                "byte {b} at offset {} outside 63..=126",
                i + 1
            )));
        }
        groups.push(b - 63);
    }
    let bit = |k: usize| (groups[k / 6] >> (5 - k % 6)) & 1 == 1;
    for k in bits..expected * 6 {
        if bit(k) {
            return Err(GraphError::MalformedGraph6("nonzero padding bits".into()));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes `g` as a graph6 record without trailing newline.
pub fn emit_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(GraphError::UnsupportedSize(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut groups = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                groups[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(groups.len() + 1);
    out.push((n as u8 + 63) as char);
    out.extend(groups.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

fn extended_size(body: &[u8]) -> usize {
    let (width, digits) = match body.first() {
        Some(126) => (6, &body[1..]),
        _ => (3, body),
    };
    digits
        .iter()
        .take(width)
        .fold(0usize, |acc, &b| (acc << 6) | (b.saturating_sub(63) as usize & 63))
}

fn trim_ascii(mut b: &[u8]) -> &[u8] {
    while let [first, rest @ ..] = b {
        if first.is_ascii_whitespace() {
            b = rest;
        } else {
            break;
        }
    }
    while let [rest @ .., last] = b {
        if last.is_ascii_whitespace() {
            b = rest;
        } else {
            break;
        }
    }
    b
}

/// A graph read from the edge-list format together with the original vertex
/// labels: `labels[v]` is the input token that became vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl EdgeList {
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
/// Text after `#` is a comment. If every endpoint is an integer in `0..n`
/// the indices are used as given; otherwise vertices are numbered in order
/// of first appearance.
pub fn parse_edge_list(text: &str) -> Result<EdgeList, GraphError> {
    let err = |line: usize, msg: String| GraphError::MalformedEdgeList { line, msg };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header `n m`".into()))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(err(hline, format!("header must be `n m`, got `{header}`")));
    }
    let parse_count = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| err(hline, format!("`{s}` is not a nonnegative integer")))
    };
    let (n, m) = (parse_count(nums[0])?, parse_count(nums[1])?);

    let mut raw: Vec<(usize, &str, &str)> = Vec::with_capacity(m);
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(err(line, format!("expected `u v`, got `{body}`")));
        }
        raw.push((line, toks[0], toks[1]));
    }
    if raw.len() != m {
        return Err(err(
            hline,
            format!("header declares {m} edges but {} were given", raw.len()),
        ));
    }

    let as_index = |t: &str| t.parse::<usize>().ok().filter(|&v| v < n);
    let dense = raw
        .iter()
        .all(|(_, a, b)| as_index(a).is_some() && as_index(b).is_some());

    let mut labels: Vec<String>;
    let mut edges = Vec::with_capacity(m);
    if dense {
        labels = (0..n).map(|v| v.to_string()).collect();
        for (_, a, b) in &raw {
            edges.push((as_index(a).unwrap(), as_index(b).unwrap()));
        }
    } else {
        labels = Vec::new();
        let mut index: HashMap<&str, usize> = HashMap::new();
        for &(line, a, b) in &raw {
            let mut ends = [0usize; 2];
            for (slot, tok) in ends.iter_mut().zip([a, b]) {
                let next = index.len();
                *slot = *index.entry(tok).or_insert_with(|| {
                    labels.push(tok.to_string());
                    next
                });
            }
            if index.len() > n {
                return Err(err(line, format!("more than {n} distinct vertex labels")));
            }
            edges.push((ends[0], ends[1]));
        }
        // Vertices that never appear in an edge keep a synthetic label.
        for v in labels.len()..n {
            labels.push(format!("_{v}"));
        }
    }
    let graph = Graph::from_edges(n, edges).map_err(|e| err(hline, e.to_string()))?;
    Ok(EdgeList { graph, labels })
}

impl Graph {
    /// Serialises to the edge-list format accepted by [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}
