//! graph6 short form (orders 0..=62).
//!
//! Layout: one header byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`) packed
//! big-endian into 6-bit groups, each group offset by 63. The final group is
//! zero-padded.

use std::path::Path;

use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

pub const GRAPH6_MAX_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

fn bit_bytes(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(err(0, "empty input"));
    };
    if head == 126 {
        return Err(err(0, "long-form order header is not supported"));
    }
    if !(63..126).contains(&head) {
        return Err(err(0, format!("invalid header byte {:#04x}", head)));
    }
    let n = (head - 63) as usize;
    let need = bit_bytes(n);
    let body = &bytes[1..];
    if body.len() < need {
        return Err(err(
            bytes.len(),
            format!(
                "truncated bit vector: expected {} data bytes, found {}",
                need,
                body.len()
            ),
        ));
    }
    if body.len() > need {
        return Err(err(1 + need, "trailing bytes after bit vector"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(1 + i, format!("byte {:#04x} outside 63..=126", b)));
        }
    }

    let mut adj = vec![VertexSet::empty(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = body[need - 1] - 63;
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(err(need, "nonzero padding bits"));
        }
    }
    Graph::from_adjacency(adj)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order: n,
            limit: GRAPH6_MAX_ORDER,
        });
    }
    let mut data = vec![0u8; bit_bytes(n)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + data.len());
    out.push((n as u8 + 63) as char);
    out.extend(data.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

/// Reads a corpus file: one graph6 string per line, blank lines and the
/// `>>graph6<<` header tolerated. Graphs are named `<file stem>:<line>`.
pub fn read_graph6_corpus(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {}", path.display(), e)))?;
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        let line = line.strip_prefix(HEADER).unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line)
            .map_err(|e| Error::Io(format!("{}:{}: {}", path.display(), lineno + 1, e)))?;
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    fn edges(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn decodes_star_example() {
        // '?' = 0b000000, '{' = 60 = 0b111100: bits 6..9 are (0,4),(1,4),(2,4),(3,4).
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(edges(&g), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn small_cases() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.order(), edges(&k2)), (2, vec![(0, 1)]));
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.order(), k1.edge_count()), (1, 0));
        assert_eq!(
            emit_graph6(&make_family(Family::Complete, 1).unwrap()).unwrap(),
            "@"
        );
        assert_eq!(
            emit_graph6(&make_family(Family::Complete, 2).unwrap()).unwrap(),
            "A_"
        );
        assert_eq!(parse_graph6("?\n").unwrap().order(), 0);
    }

    #[test]
    fn error_offsets() {
        match parse_graph6("D?") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{:?}", other),
        }
        match parse_graph6("A_x") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{:?}", other),
        }
        match parse_graph6("A ") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{:?}", other),
        }
        match parse_graph6("~??") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("{:?}", other),
        }
        // K_2 with a padding bit set.
        assert!(parse_graph6("A`").is_err());
        assert!(parse_graph6("").is_err());
    }

    #[test]
    fn emit_rejects_large_orders() {
        let g = Graph::empty(63).unwrap();
        assert!(matches!(
            emit_graph6(&g),
            Err(Error::UnsupportedOrder { .. })
        ));
    }
}
