//! The graph6 text encoding: one size byte followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable character.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;

pub fn encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + BIAS) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 2..=n {
        for i in 1..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + BIAS) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + BIAS) as char);
    }
    out
}

pub fn decode(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(BIAS..=126).contains(&head) {
        return Err(Error::Graph6(format!("bad size byte {head:#x}")));
    }
    let n = (head - BIAS) as usize;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n, MAX_VERTICES));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut stream = Vec::with_capacity(expected * 6);
    for &b in body {
        if !(BIAS..=126).contains(&b) {
            return Err(Error::Graph6(format!(
                "byte {b:#x} outside the printable range"
            )));
        }
        let v = b - BIAS;
        stream.extend((0..6).rev().map(|k| v >> k & 1 == 1));
    }
    if stream[bits..].iter().any(|&b| b) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 2..=n {
        for i in 1..j {
            if stream[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        decode(text)
    }
}

/// Serde adapter storing a [`Graph`] as its graph6 string.
pub mod serde_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::graph::Graph;

    pub fn serialize<S: Serializer>(g: &Graph, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&super::encode(g))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Graph, D::Error> {
        let text = String::deserialize(deserializer)?;
        super::decode(&text).map_err(serde::de::Error::custom)
    }
}
