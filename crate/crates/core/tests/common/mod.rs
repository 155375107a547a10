#![allow(dead_code)]

use std::collections::BTreeSet;

use twotrans::generate::staircase_edges;
use twotrans::Graph;

/// AHU encoding of the subtree at `v` away from `parent`.
fn encode(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| encode(g, w, Some(v)))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in g.neighbors(v) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

fn canonical(g: &Graph) -> String {
    centers(g)
        .into_iter()
        .map(|c| encode(g, c, None))
        .min()
        .unwrap()
}

/// Every tree on `n` vertices up to isomorphism (1, 1, 1, 2, 3, 6, 11, 23, 47, 106 for n = 1..10).
pub fn trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut level = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..size - 1 {
                let mut edges = t.edge_vec();
                edges.push((v, size - 1));
                let g = Graph::from_edges(size, &edges).unwrap();
                if seen.insert(canonical(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

fn staircases(a: usize, b: usize, prefix: &mut Vec<usize>, out: &mut Vec<Graph>) {
    if prefix.len() == a {
        out.push(Graph::from_edges(a + b, &staircase_edges(prefix, b)).unwrap());
        return;
    }
    let hi = prefix.last().copied().unwrap_or(b);
    let lo = if prefix.is_empty() { b } else { 1 };
    for d in lo..=hi {
        prefix.push(d);
        staircases(a, b, prefix, out);
        prefix.pop();
    }
}

/// Every connected bipartite chain graph on `n >= 2` vertices, up to
/// isomorphism and possibly with each graph listed once per side order.
pub fn chain_graphs(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for a in 1..n {
        staircases(a, n - a, &mut Vec::new(), &mut out);
    }
    out
}
