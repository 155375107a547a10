//! Graph generators: standard families, 2-complete minimum broadcast trees,
//! near-complete bipartite graphs, and seeded random trees, split graphs and
//! chain graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::RootedTree;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The standard families accepted by [`generate_standard`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Standard {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
}

pub fn generate_standard(kind: Standard) -> Result<Graph> {
    match kind {
        Standard::Path(n) => path(n),
        Standard::Cycle(n) => cycle(n),
        Standard::Complete(n) => complete(n),
        Standard::CompleteBipartite(a, b) => complete_bipartite(a, b),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::domain("path needs n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges_trusted(n, &edges))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::domain("cycle needs n >= 3"));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Ok(Graph::from_edges_trusted(n, &edges))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::domain("complete graph needs n >= 1"));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            edges.push((i, j));
        }
    }
    Ok(Graph::from_edges_trusted(n, &edges))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::domain(
            "complete bipartite graph needs both sides >= 1",
        ));
    }
    let mut edges = Vec::with_capacity(a * b);
    for x in 0..a {
        for y in a..a + b {
            edges.push((x, y));
        }
    }
    Ok(Graph::from_edges_trusted(a + b, &edges))
}

/// Shape of a 2-cmbt rooted at `vertex`.
///
/// Children come in pairs: `children[2i]` and `children[2i + 1]` root
/// 2-cmbts of order `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmbtShape {
    pub vertex: usize,
    pub children: Vec<CmbtShape>,
}

impl CmbtShape {
    pub fn order(&self) -> usize {
        self.children.len() / 2 + 1
    }

    /// Every vertex of the subtree, preorder.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            out.push(node.vertex);
            stack.extend(node.children.iter().rev());
        }
        out
    }
}

/// Number of vertices of a 2-cmbt of order `k`: `3^(k-1)`.
pub fn cmbt_size(order: usize) -> usize {
    3usize.pow(order.saturating_sub(1) as u32)
}

/// Grows a 2-cmbt of `order` under the existing vertex `root`, allocating
/// interior ids from `next` in preorder and appending tree edges.
pub(crate) fn grow_cmbt(
    root: usize,
    order: usize,
    next: &mut usize,
    edges: &mut Vec<(usize, usize)>,
) -> CmbtShape {
    let mut children = Vec::with_capacity(2 * order.saturating_sub(1));
    for child_order in 1..order {
        for _ in 0..2 {
            let v = *next;
            *next += 1;
            edges.push((root, v));
            children.push(grow_cmbt(v, child_order, next, edges));
        }
    }
    CmbtShape {
        vertex: root,
        children,
    }
}

/// The 2-cmbt of order `k` rooted at vertex 0, with its shape.
pub fn cmbt_with_shape(k: usize) -> Result<(RootedTree, CmbtShape)> {
    if k < 1 {
        return Err(Error::domain("2-cmbt order must be >= 1"));
    }
    let mut next = 1;
    let mut edges = Vec::new();
    let shape = grow_cmbt(0, k, &mut next, &mut edges);
    let g = Graph::from_edges_trusted(next, &edges);
    Ok((RootedTree::new(g, 0)?, shape))
}

pub fn generate_cmbt(k: usize) -> Result<RootedTree> {
    cmbt_with_shape(k).map(|(t, _)| t)
}

/// `K_{2s,2s-1}` minus one 4-cycle, with `s = ⌊t/2⌋`.
#[derive(Clone, Debug)]
pub struct NearCompleteBipartite {
    pub graph: Graph,
    /// `x_1..x_{2s}` in order.
    pub x: Vec<usize>,
    /// `y_1..y_{2s-1}` in order.
    pub y: Vec<usize>,
    /// Set when the `Y` side is too small to host the removed 4-cycle
    /// (`t` in {2, 3}); the graph is then plain `K_{2,1}`.
    pub degenerate: bool,
}

/// Builds `K_{2s,2s-1} \ C4` for `s = ⌊t/2⌋`, removing the four edges between
/// `{x_{2s-1}, x_{2s}}` and `{y_{2s-2}, y_{2s-1}}`. X is `0..2s`, Y follows.
pub fn generate_near_complete_bipartite(t: usize) -> Result<NearCompleteBipartite> {
    if t < 2 {
        return Err(Error::domain("near-complete bipartite graph needs t >= 2"));
    }
    let s = t / 2;
    let (a, b) = (2 * s, 2 * s - 1);
    let degenerate = b < 2;
    let mut edges = Vec::new();
    for i in 1..=a {
        for j in 1..=b {
            let removed = !degenerate && i >= a - 1 && j >= b - 1;
            if !removed {
                edges.push((i - 1, a + j - 1));
            }
        }
    }
    Ok(NearCompleteBipartite {
        graph: Graph::from_edges_trusted(a + b, &edges),
        x: (0..a).collect(),
        y: (a..a + b).collect(),
        degenerate,
    })
}

fn relabel(n: usize, edges: &[(usize, usize)], rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges_trusted(n, &edges)
}

/// Uniformly random recursive tree on `n` vertices with shuffled ids.
pub fn random_tree(seed: u64, n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::domain("random tree needs n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Ok(relabel(n, &edges, &mut rng))
}

/// Random tree with every degree at most `max_degree` (at least 2 when n > 2).
pub fn random_tree_bounded(seed: u64, n: usize, max_degree: usize) -> Result<Graph> {
    if n < 1 || (n > 2 && max_degree < 2) || (n == 2 && max_degree < 1) {
        return Err(Error::domain("degree bound too small for a tree"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut deg = vec![0usize; n];
    let mut open: Vec<usize> = vec![0];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        let idx = rng.gen_range(0..open.len());
        let u = open[idx];
        edges.push((u, v));
        deg[u] += 1;
        deg[v] += 1;
        if deg[u] == max_degree {
            open.swap_remove(idx);
        }
        if deg[v] < max_degree {
            open.push(v);
        }
    }
    Ok(relabel(n, &edges, &mut rng))
}

/// Random connected split graph: a clique of random size, every other vertex
/// adjacent to a random nonempty subset of the clique.
pub fn random_split(seed: u64, n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::domain("random split graph needs n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = rng.gen_range(1..=n);
    let mut edges = Vec::new();
    for j in 1..c {
        for i in 0..j {
            edges.push((i, j));
        }
    }
    for s in c..n {
        let mut any = false;
        for k in 0..c {
            if rng.gen_bool(0.5) {
                edges.push((k, s));
                any = true;
            }
        }
        if !any {
            edges.push((rng.gen_range(0..c), s));
        }
    }
    Ok(relabel(n, &edges, &mut rng))
}

/// Random connected bipartite chain graph on `n >= 2` vertices, built from a
/// random staircase of X-side degrees.
pub fn random_chain(seed: u64, n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::domain("random chain graph needs n >= 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = rng.gen_range(1..n);
    let b = n - a;
    let mut degrees: Vec<usize> = (0..a).map(|_| rng.gen_range(1..=b)).collect();
    degrees.sort_unstable_by(|p, q| q.cmp(p));
    degrees[0] = b;
    Ok(relabel(n, &staircase_edges(&degrees, b), &mut rng))
}

/// Edges of the chain graph whose X vertex `i` is adjacent to the first
/// `degrees[i]` Y vertices. X is `0..a`, Y is `a..a+b`.
pub fn staircase_edges(degrees: &[usize], b: usize) -> Vec<(usize, usize)> {
    let a = degrees.len();
    let mut edges = Vec::new();
    for (i, &d) in degrees.iter().enumerate() {
        for j in 0..d.min(b) {
            edges.push((i, a + j));
        }
    }
    edges
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// independently with probability `p`.
pub fn random_connected(seed: u64, n: usize, p: f64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::domain("random graph needs n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut present = vec![false; n * n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        present[u * n + v] = true;
        edges.push((u, v));
    }
    for j in 1..n {
        for i in 0..j {
            if !present[i * n + j] && rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Ok(relabel(n, &edges, &mut rng))
}
