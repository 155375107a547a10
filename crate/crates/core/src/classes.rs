//! Rooted trees, chain orderings, split decompositions and class recognition.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A tree together with a root, parent pointers and a BFS order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    graph: Graph,
    root: usize,
    parent: Vec<Option<usize>>,
    bfs_order: Vec<usize>,
}

impl RootedTree {
    /// Roots `graph` at `root`; fails unless `graph` is a tree.
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        let n = graph.n();
        if n == 0 || root >= n {
            return Err(Error::domain("tree root out of range"));
        }
        if graph.m() + 1 != n || !graph.is_connected() {
            return Err(Error::domain("graph is not a tree"));
        }
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut bfs_order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            bfs_order.push(u);
            for &w in graph.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        Ok(RootedTree {
            graph,
            root,
            parent,
            bfs_order,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn bfs_order(&self) -> &[usize] {
        &self.bfs_order
    }

    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let p = self.parent[v];
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| Some(w) != p)
    }

    /// The same tree rooted at `r`.
    pub fn reroot(&self, r: usize) -> Result<Self> {
        RootedTree::new(self.graph.clone(), r)
    }
}

/// Nested-neighbourhood orderings of the two sides of a bipartite chain graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainOrdering {
    pub x_order: Vec<usize>,
    pub y_order: Vec<usize>,
}

impl ChainOrdering {
    /// Checks that the orders cover a bipartition of `g` and that
    /// neighbourhoods are nested along each order.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let mut side = vec![None; n];
        for (s, order) in [(0u8, &self.x_order), (1u8, &self.y_order)] {
            for &v in order.iter() {
                if v >= n || side[v].is_some() {
                    return Err(Error::domain("chain ordering is not a partition"));
                }
                side[v] = Some(s);
            }
        }
        if side.iter().any(Option::is_none) {
            return Err(Error::domain("chain ordering misses vertices"));
        }
        for (u, v) in g.edges() {
            if side[u] == side[v] {
                return Err(Error::domain(format!("edge {u}-{v} inside one side")));
            }
        }
        let mut mark = vec![usize::MAX; n];
        for order in [&self.x_order, &self.y_order] {
            for (i, w) in order.windows(2).enumerate() {
                for &a in g.neighbors(w[0]) {
                    mark[a] = i;
                }
                if g.neighbors(w[1]).iter().any(|&b| mark[b] != i) {
                    return Err(Error::domain(format!(
                        "neighbourhood of {} not contained in that of {}",
                        w[1], w[0]
                    )));
                }
            }
            mark.fill(usize::MAX);
        }
        Ok(())
    }
}

/// A clique `K` and an independent set `S` partitioning the vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitDecomposition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl SplitDecomposition {
    /// Checks the partition, clique and independence conditions.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let mut in_k = vec![None; n];
        for (flag, set) in [(true, &self.clique), (false, &self.independent)] {
            for &v in set.iter() {
                if v >= n || in_k[v].is_some() {
                    return Err(Error::domain("split decomposition is not a partition"));
                }
                in_k[v] = Some(flag);
            }
        }
        if in_k.iter().any(Option::is_none) {
            return Err(Error::domain("split decomposition misses vertices"));
        }
        let kk = self.clique.len();
        if self.clique.iter().any(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| in_k[w] == Some(true))
                .count()
                != kk - 1
        }) {
            return Err(Error::domain("K is not a clique"));
        }
        if self
            .independent
            .iter()
            .any(|&v| g.neighbors(v).iter().any(|&w| in_k[w] == Some(false)))
        {
            return Err(Error::domain("S is not independent"));
        }
        Ok(())
    }
}

/// Result of [`recognize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphClass {
    Tree(RootedTree),
    Split(SplitDecomposition),
    Chain(ChainOrdering),
    General,
}

impl GraphClass {
    pub fn name(&self) -> &'static str {
        match self {
            GraphClass::Tree(_) => "tree",
            GraphClass::Split(_) => "split",
            GraphClass::Chain(_) => "chain",
            GraphClass::General => "general",
        }
    }
}

pub fn has_p3(g: &Graph) -> bool {
    g.max_degree() >= 2
}

/// Classifies a connected graph, trying tree, split and chain in that order.
pub fn recognize(g: &Graph) -> Result<GraphClass> {
    if g.n() == 0 {
        return Err(Error::domain("empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::domain("recognize needs a connected graph"));
    }
    if g.m() + 1 == g.n() {
        return Ok(GraphClass::Tree(RootedTree::new(g.clone(), 0)?));
    }
    if let Some(d) = split_decomposition(g) {
        return Ok(GraphClass::Split(d));
    }
    if let Some(o) = chain_ordering(g) {
        return Ok(GraphClass::Chain(o));
    }
    Ok(GraphClass::General)
}

/// Vertices sorted by non-increasing degree, ties by id.
pub(crate) fn degree_order(g: &Graph, vertices: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut vs: Vec<usize> = vertices.into_iter().collect();
    vs.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    vs
}

/// Hammer–Simeone recognition; `K` is grown to a maximum clique.
pub fn split_decomposition(g: &Graph) -> Option<SplitDecomposition> {
    let order = degree_order(g, 0..g.n());
    let d: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let h = (1..=d.len())
        .filter(|&i| d[i - 1] + 1 >= i)
        .max()
        .unwrap_or(0);
    let head: usize = d[..h].iter().sum();
    let tail: usize = d[h..].iter().sum();
    if head != h * h.saturating_sub(1) + tail {
        return None;
    }
    let mut clique = order[..h].to_vec();
    let mut independent = order[h..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    let d = SplitDecomposition {
        clique,
        independent,
    };
    crate::split::maximize_clique(&d, g).ok()
}

/// Two-colouring by BFS; `side[v]` is false for the class of each
/// component's smallest vertex.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    _ => {}
                }
            }
        }
    }
    Some(side.into_iter().map(Option::unwrap).collect())
}

/// Chain ordering of a connected bipartite chain graph, or `None`.
/// X is the side containing vertex 0.
pub fn chain_ordering(g: &Graph) -> Option<ChainOrdering> {
    if g.n() == 0 || !g.is_connected() {
        return None;
    }
    let side = bipartition(g)?;
    let ord = ChainOrdering {
        x_order: degree_order(g, (0..g.n()).filter(|&v| !side[v])),
        y_order: degree_order(g, (0..g.n()).filter(|&v| side[v])),
    };
    ord.verify(g).ok()?;
    Some(ord)
}

/// Maximum cardinality search; returns vertices in the reverse of visit
/// order, which is a perfect elimination ordering iff `g` is chordal.
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> = (0..n).map(|v| (0, Reverse(v))).collect();
    let mut visit = Vec::with_capacity(n);
    while let Some((w, Reverse(v))) = heap.pop() {
        if done[v] || w != weight[v] {
            continue;
        }
        done[v] = true;
        visit.push(v);
        for &u in g.neighbors(v) {
            if !done[u] {
                weight[u] += 1;
                heap.push((weight[u], Reverse(u)));
            }
        }
    }
    visit.reverse();
    visit
}

/// True when every vertex is simplicial among its later neighbours.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        let Some(&p) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if later.iter().any(|&w| w != p && !g.has_edge(p, w)) {
            return false;
        }
    }
    true
}

/// A perfect elimination ordering when `g` is chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let order = mcs_order(g);
    is_perfect_elimination_ordering(g, &order).then_some(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn k4_pendants() -> Graph {
        let mut e = generate::complete(4).unwrap().edge_vec();
        e.extend([(0, 4), (1, 5), (2, 6)]);
        Graph::from_edges(7, &e).unwrap()
    }

    #[test]
    fn p3_detection() {
        assert!(!has_p3(&generate::complete(2).unwrap()));
        assert!(has_p3(&generate::path(3).unwrap()));
        assert!(has_p3(&generate::complete(5).unwrap()));
    }

    #[test]
    fn recognition_order() {
        assert_eq!(
            recognize(&generate::path(5).unwrap()).unwrap().name(),
            "tree"
        );
        match recognize(&k4_pendants()).unwrap() {
            GraphClass::Split(d) => assert_eq!(d.clique.len(), 4),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            recognize(&generate::cycle(4).unwrap()).unwrap().name(),
            "chain"
        );
        assert_eq!(
            recognize(&generate::cycle(5).unwrap()).unwrap().name(),
            "general"
        );
        assert!(recognize(&Graph::empty(2)).is_err());
    }

    #[test]
    fn rooted_tree_bfs() {
        let t = generate::generate_cmbt(3).unwrap();
        assert_eq!(t.bfs_order()[0], t.root());
        let mut seen = vec![false; t.graph().n()];
        for &v in t.bfs_order() {
            if let Some(p) = t.parent(v) {
                assert!(seen[p]);
            }
            seen[v] = true;
        }
        assert!(RootedTree::new(generate::cycle(3).unwrap(), 0).is_err());
    }

    #[test]
    fn chain_orderings() {
        let g = generate::complete_bipartite(2, 3).unwrap();
        let o = chain_ordering(&g).unwrap();
        assert_eq!(o.x_order, vec![0, 1]);
        o.verify(&g).unwrap();
        assert!(chain_ordering(&generate::path(6).unwrap()).is_none());
        let bad = ChainOrdering {
            x_order: vec![0, 2],
            y_order: vec![1, 3],
        };
        assert!(bad.verify(&generate::path(4).unwrap()).is_err());
    }

    #[test]
    fn peo_on_chordal_and_cycle() {
        assert!(perfect_elimination_ordering(&k4_pendants()).is_some());
        assert!(perfect_elimination_ordering(&generate::cycle(5).unwrap()).is_none());
        assert!(bipartition(&generate::cycle(6).unwrap()).is_some());
        assert!(bipartition(&generate::cycle(5).unwrap()).is_none());
    }
}
