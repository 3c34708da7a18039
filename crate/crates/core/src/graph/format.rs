//! graph6 (short form) and plain edge-list text formats.

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_MAX_N: usize = 62;

/// Decodes one short-form graph6 line (`n <= 62`).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(63..=126).contains(&head) {
        return Err(Error::Graph6(format!("bad header byte {head:#04x}")));
    }
    if head == 126 {
        return Err(Error::Graph6("long form (n > 62) is not supported".into()));
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(Error::Graph6("graphs need at least one vertex".into()));
    }
    let nbits = n * (n - 1) / 2;
    let nchars = nbits.div_ceil(6);
    if body.len() != nchars {
        return Err(Error::Graph6(format!(
            "expected {nchars} data characters for n={n}, found {}",
            body.len()
        )));
    }
    let mut data = Vec::with_capacity(nchars);
    for &c in body {
        if !(63..=126).contains(&c) {
            return Err(Error::Graph6(format!("character {:?} out of range", c as char)));
        }
        data.push(c - 63);
    }
    let bit = |k: usize| data[k / 6] >> (5 - k % 6) & 1 == 1;
    for k in nbits..nchars * 6 {
        if bit(k) {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph in short-form graph6 with zero padding.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::Graph6(format!("n={n} exceeds the short-form limit {GRAPH6_MAX_N}")));
    }
    let mut out = String::with_capacity(1 + (n * n) / 12 + 1);
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Renders `n m` followed by one `u v` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Parses a sequence of edge-list records (`n m` header then `m` lines `u v`).
pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let mut graphs = Vec::new();
    while let Some(header) = lines.next() {
        let (n, m) = two_ints(header)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::EdgeList(format!("expected {m} edges after header {header:?}")))?;
            edges.push(two_ints(line)?);
        }
        graphs.push(Graph::from_edges(n, &edges)?);
    }
    Ok(graphs)
}

fn two_ints(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::EdgeList(format!("not a nonnegative integer: {t:?}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::EdgeList(format!("expected two integers, got {line:?}"))),
    }
}

/// Parses graph file contents, auto-detecting graph6 lines versus edge lists.
///
/// A graph6 line is a single token of characters in `?..~`, which never
/// contains whitespace or digits, so a first line made of integers selects the
/// edge-list reader.
pub fn parse_graph_file(text: &str) -> Result<Vec<Graph>> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Ok(Vec::new()),
        Some(l) if l.split_whitespace().all(|t| t.parse::<usize>().is_ok()) => {
            parse_edge_lists(text)
        }
        Some(_) => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(parse_graph6)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_examples() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        assert_eq!(parse_graph6("Ch").unwrap(), Graph::path(4));
        assert_eq!(parse_graph6("Cl").unwrap(), Graph::cycle(4));
        assert_eq!(emit_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(emit_graph6(&Graph::path(4)).unwrap(), "Ch");
        assert_eq!(emit_graph6(&Graph::cycle(4)).unwrap(), "Cl");
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("").is_err());
        // header fine, wrong length
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("Chh").is_err());
        // n=3 packs 3 bits into one character; "Bx" sets a padding bit.
        assert!(parse_graph6("Bx").is_err());
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph6("Bo").unwrap().edges(), vec![(0, 1), (0, 2)]);
        assert!(parse_graph6("C\u{7f}").is_err());
        assert!(parse_graph6("C ").is_err());
        assert!(parse_graph6("~?").is_err());
    }

    #[test]
    fn edge_list_round_trip_and_detection() {
        let c5 = Graph::cycle(5);
        let text = format!("{}{}", to_edge_list(&c5), to_edge_list(&Graph::path(3)));
        let gs = parse_graph_file(&text).unwrap();
        assert_eq!(gs, vec![c5, Graph::path(3)]);
        let gs = parse_graph_file("Ch\nCl\n").unwrap();
        assert_eq!(gs, vec![Graph::path(4), Graph::cycle(4)]);
        assert!(parse_edge_lists("3 2\n0 1\n").is_err());
        assert!(parse_edge_lists("3 1\n0 5\n").is_err());
    }
}
