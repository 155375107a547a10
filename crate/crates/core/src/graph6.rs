//! graph6 encoding of simple undirected graphs.
//!
//! Size field: one byte `n + 63` for `n < 63`, `126` plus three 6-bit bytes
//! for `n < 258048`, `126 126` plus six 6-bit bytes otherwise. The upper
//! triangle follows column by column, six bits per byte, zero padded.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &[u8] = b">>graph6<<";

/// Encodes `g` as a graph6 line terminated by a single newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }

    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    out.push(b'\n');
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 record. An optional `>>graph6<<` header and trailing
/// line terminator are accepted; padding bits are ignored.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut data = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    while let [rest @ .., b'\n' | b'\r'] = data {
        data = rest;
    }
    if let Some(pos) = data.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(
            1,
            format!("invalid graph6 byte at offset {pos}"),
        ));
    }
    let (n, body) = decode_size(data)?;
    if n > MAX_VERTICES {
        return Err(Error::parse(
            1,
            format!("vertex count {n} exceeds {MAX_VERTICES}"),
        ));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Error::parse(
            1,
            format!(
                "graph6 payload has {} bytes, expected {expected} for n = {n}",
                body.len()
            ),
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            if k == pairs {
                break 'outer;
            }
            let byte = body[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| Error::parse(1, e.to_string()))
}

fn decode_size(data: &[u8]) -> Result<(usize, &[u8])> {
    let six = |bs: &[u8]| {
        bs.iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
    };
    match data {
        [] => Err(Error::parse(1, "empty graph6 record")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::parse(1, "truncated graph6 size field"));
            }
            Ok((six(&rest[..6]), &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::parse(1, "truncated graph6 size field"));
            }
            Ok((six(&rest[..3]), &rest[3..]))
        }
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}
