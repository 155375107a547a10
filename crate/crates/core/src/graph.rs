//! Simple undirected graphs on dense `0..n` vertex ids, plus the edge-list
//! text format.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Largest vertex count accepted by the text parsers.
pub const MAX_VERTICES: usize = 1 << 22;

/// Immutable simple undirected graph.
///
/// Adjacency lists are sorted and symmetric; there are no loops or parallel
/// edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::domain(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::domain(format!("duplicate edge at vertex {v}")));
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    /// Builds a graph from pre-validated edges. Used by generators whose
    /// output is simple by construction.
    pub(crate) fn from_edges_trusted(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::from_edges(n, edges).expect("generator produced a non-simple graph")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_vec(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges_trusted(vertices.len(), &edges)
    }

    /// Copy of the graph without the edge `u`-`v` (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let edges: Vec<_> = self
            .edges()
            .filter(|&(a, b)| !((a, b) == (u, v) || (a, b) == (v, u)))
            .collect();
        Graph::from_edges_trusted(self.n(), &edges)
    }

    /// Copy of the graph with vertex `v` deleted and ids above it shifted down.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Renders the edge-list format: `n m` header, one `u v` line per edge
    /// with `u < v`, single trailing newline.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{} {}", self.n(), self.m()).unwrap();
        for (u, v) in self.edges() {
            writeln!(s, "{u} {v}").unwrap();
        }
        s
    }
}

/// Parses the edge-list format.
///
/// The first line holds `n m`; exactly `m` lines `u v` follow. Blank lines
/// after the last edge are ignored. Errors carry the 1-based line number.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(0, "empty input"))?;
    let (n, m) = parse_pair(hline, header)?;
    if n > MAX_VERTICES {
        return Err(Error::parse(
            hline,
            format!("vertex count {n} exceeds {MAX_VERTICES}"),
        ));
    }

    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut last_line = hline;
    for (lineno, line) in lines {
        last_line = lineno;
        if line.is_empty() {
            continue;
        }
        if edges.len() == m {
            return Err(Error::parse(lineno, format!("more than {m} edge lines")));
        }
        let (u, v) = parse_pair(lineno, line)?;
        if u >= n || v >= n {
            return Err(Error::parse(
                lineno,
                format!("vertex out of range: {u} {v} with n = {n}"),
            ));
        }
        if u == v {
            return Err(Error::parse(lineno, format!("self-loop at vertex {u}")));
        }
        edges.push((u.min(v), u.max(v), lineno));
    }
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("expected {m} edge lines, found {}", edges.len()),
        ));
    }
    edges.sort_unstable();
    if let Some(w) = edges
        .windows(2)
        .filter(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1))
        .min_by_key(|w| w[1].2)
    {
        return Err(Error::parse(
            w[1].2,
            format!("duplicate edge {} {}", w[1].0, w[1].1),
        ));
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v, _) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Graph { adj, m })
}

fn parse_pair(lineno: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::parse(lineno, format!("missing {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| Error::parse(lineno, format!("invalid {what} {tok:?}")))
    };
    let a = next("first integer")?;
    let b = next("second integer")?;
    if it.next().is_some() {
        return Err(Error::parse(lineno, "trailing tokens"));
    }
    Ok((a, b))
}
