//! Ordered vertex partitions, their text format, and the transitivity
//! verifiers.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Ordered partition `V_1..V_k` of `0..n`; each part is sorted and nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexPartition {
    parts: Vec<Vec<usize>>,
    n: usize,
}

impl VertexPartition {
    /// Validates that `parts` are disjoint, nonempty and cover `0..n`.
    pub fn from_parts(n: usize, parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut parts = parts;
        for (i, part) in parts.iter_mut().enumerate() {
            if part.is_empty() {
                return Err(Error::domain(format!("part {} is empty", i + 1)));
            }
            for &v in part.iter() {
                if v >= n {
                    return Err(Error::domain(format!("vertex {v} out of range")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::domain(format!("vertex {v} in two parts")));
                }
            }
            part.sort_unstable();
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::domain(format!("vertex {v} in no part")));
        }
        Ok(VertexPartition { parts, n })
    }

    /// Builds the partition from 1-based labels; every label in `1..=max`
    /// must be used.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let k = labels.iter().copied().max().unwrap_or(0);
        if labels.contains(&0) {
            return Err(Error::domain("part labels are 1-based"));
        }
        let mut parts = vec![Vec::new(); k];
        for (v, &l) in labels.iter().enumerate() {
            parts[l - 1].push(v);
        }
        Self::from_parts(labels.len(), parts)
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// `V_i` with 1-based `i`.
    pub fn part(&self, i: usize) -> &[usize] {
        &self.parts[i - 1]
    }

    /// 1-based part index of every vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                labels[v] = i + 1;
            }
        }
        labels
    }

    /// The partition file: one `v p` line per vertex, sorted by `v`.
    pub fn to_partition_file(&self) -> String {
        let mut s = String::new();
        for (v, p) in self.labels().into_iter().enumerate() {
            writeln!(s, "{v} {p}").unwrap();
        }
        s
    }
}

/// Parses a partition file. Lines may come in any order but each vertex of
/// `0..n` must appear exactly once, and labels must use every part `1..=k`.
pub fn parse_partition(text: &str) -> Result<VertexPartition> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let mut field = |what: &str| -> Result<usize> {
            let tok = it
                .next()
                .ok_or_else(|| Error::parse(lineno, format!("missing {what}")))?;
            tok.parse()
                .map_err(|_| Error::parse(lineno, format!("invalid {what} {tok:?}")))
        };
        let v = field("vertex")?;
        let p = field("part")?;
        if it.next().is_some() {
            return Err(Error::parse(lineno, "trailing tokens"));
        }
        if p == 0 {
            return Err(Error::parse(lineno, "part indices are 1-based"));
        }
        if v >= MAX_VERTICES {
            return Err(Error::parse(lineno, format!("vertex {v} too large")));
        }
        entries.push((v, p, lineno));
    }
    let n = entries.len();
    let mut labels = vec![0usize; n];
    for &(v, p, lineno) in &entries {
        if v >= n {
            return Err(Error::parse(
                lineno,
                format!("vertex {v} out of range for {n} lines"),
            ));
        }
        if labels[v] != 0 {
            return Err(Error::parse(lineno, format!("vertex {v} listed twice")));
        }
        if p > n {
            return Err(Error::parse(
                lineno,
                format!("part {p} exceeds vertex count"),
            ));
        }
        labels[v] = p;
    }
    VertexPartition::from_labels(&labels).map_err(|e| Error::parse(0, e.to_string()))
}

/// A vertex of `V_j` with fewer than the required neighbours in `V_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub vertex: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V_{} does not dominate vertex {} of V_{}",
            self.i, self.vertex, self.j
        )
    }
}

/// First violation of `threshold`-domination, scanning `j` ascending, then
/// vertices of `V_j` ascending, then `i` ascending.
pub fn first_violation(
    g: &Graph,
    p: &VertexPartition,
    threshold: usize,
) -> Result<Option<Violation>> {
    if p.n() != g.n() {
        return Err(Error::domain(format!(
            "partition covers {} vertices, graph has {}",
            p.n(),
            g.n()
        )));
    }
    let labels = p.labels();
    let mut count = vec![0usize; p.k() + 1];
    for j in 2..=p.k() {
        for &v in p.part(j) {
            for &w in g.neighbors(v) {
                count[labels[w]] += 1;
            }
            let bad = (1..j).find(|&i| count[i] < threshold);
            for &w in g.neighbors(v) {
                count[labels[w]] = 0;
            }
            if let Some(i) = bad {
                return Ok(Some(Violation { i, j, vertex: v }));
            }
        }
    }
    Ok(None)
}

pub fn verify_2transitive(g: &Graph, p: &VertexPartition) -> Result<bool> {
    Ok(first_violation(g, p, 2)?.is_none())
}

pub fn verify_transitive(g: &Graph, p: &VertexPartition) -> Result<bool> {
    Ok(first_violation(g, p, 1)?.is_none())
}
