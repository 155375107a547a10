//! Exhaustive search for the transitivity and 2-transitivity of small
//! graphs, plus the partition transformations used to cross-check solvers.
//!
//! The search fixes the vertex `z` of the last part, then labels the other
//! vertices in non-increasing degree order, trying labels from high to low.
//! Part sizes are capped by the canonical-form bounds `|V_k| = 1`,
//! `|V_{k-1}| = d` and `|V_{k-i}| <= d (d + 1)^(i - 1)`, which every
//! maximum partition can be brought into.

use crate::classes::degree_order;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{verify_2transitive, verify_transitive, VertexPartition};

/// Default node budget for the brute-force search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

struct Search<'a> {
    g: &'a Graph,
    d: usize,
    k: usize,
    order: Vec<usize>,
    label: Vec<usize>,
    // cnt[w * (k + 1) + i]: neighbours of w labelled i.
    cnt: Vec<usize>,
    free: Vec<usize>,
    size: Vec<usize>,
    caps: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, d: usize, k: usize, z: usize, nodes: u64, budget: u64) -> Self {
        let n = g.n();
        let mut caps = vec![usize::MAX; k + 1];
        caps[k] = 1;
        if k >= 2 {
            caps[k - 1] = d;
        }
        let mut cap = d;
        for i in 2..k.saturating_sub(1) {
            cap = cap.saturating_mul(d + 1);
            caps[k - i] = cap;
        }
        caps[1] = usize::MAX;
        let mut order = vec![z];
        order.extend(degree_order(g, (0..n).filter(|&v| v != z)));
        Search {
            g,
            d,
            k,
            order,
            label: vec![0; n],
            cnt: vec![0; n * (k + 1)],
            free: (0..n).map(|v| g.degree(v)).collect(),
            size: vec![0; k + 1],
            caps,
            nodes,
            budget,
        }
    }

    fn set(&mut self, u: usize, l: usize) {
        self.label[u] = l;
        self.size[l] += 1;
        let stride = self.k + 1;
        for &w in self.g.neighbors(u) {
            self.cnt[w * stride + l] += 1;
            self.free[w] -= 1;
        }
    }

    fn unset(&mut self, u: usize) {
        let l = std::mem::replace(&mut self.label[u], 0);
        self.size[l] -= 1;
        let stride = self.k + 1;
        for &w in self.g.neighbors(u) {
            self.cnt[w * stride + l] -= 1;
            self.free[w] += 1;
        }
    }

    fn feasible(&self, w: usize) -> bool {
        let l = self.label[w];
        let row = &self.cnt[w * (self.k + 1)..];
        (1..l).all(|i| row[i] + self.free[w] >= self.d)
    }

    fn consistent_around(&self, u: usize) -> bool {
        self.feasible(u) && self.g.neighbors(u).iter().all(|&w| self.feasible(w))
    }

    fn dfs(&mut self, idx: usize) -> Result<bool> {
        if idx == self.order.len() {
            return Ok(true);
        }
        let u = self.order[idx];
        let top = if idx == 0 { self.k } else { self.k - 1 };
        let bottom = if idx == 0 { self.k } else { 1 };
        for l in (bottom..=top).rev() {
            if self.size[l] >= self.caps[l] || self.g.degree(u) < self.d * (l - 1) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Budget {
                    budget: self.budget,
                });
            }
            self.set(u, l);
            if self.consistent_around(u) && self.dfs(idx + 1)? {
                return Ok(true);
            }
            self.unset(u);
        }
        Ok(false)
    }
}

/// Searches for a `d`-transitive partition of size `k` with `z` alone in
/// the last part. `nodes` accumulates the search nodes spent.
fn search_with_top(
    g: &Graph,
    d: usize,
    k: usize,
    z: usize,
    nodes: &mut u64,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    if k == 1 {
        return Ok(Some(vec![1; g.n()]));
    }
    if g.degree(z) < d * (k - 1) {
        return Ok(None);
    }
    let mut s = Search::new(g, d, k, z, *nodes, budget);
    let found = s.dfs(0);
    *nodes = s.nodes;
    Ok(found?.then_some(s.label))
}

fn degree_bound(g: &Graph, d: usize) -> usize {
    (g.max_degree() / d + 1).min(g.n())
}

fn brute(g: &Graph, d: usize, budget: u64) -> Result<(usize, VertexPartition)> {
    if g.n() == 0 {
        return Err(Error::domain("empty graph"));
    }
    let mut nodes = 0;
    let candidates = degree_order(g, 0..g.n());
    for k in (1..=degree_bound(g, d)).rev() {
        for &z in &candidates {
            if let Some(labels) = search_with_top(g, d, k, z, &mut nodes, budget)? {
                let p = VertexPartition::from_labels(&labels)?;
                debug_assert!(check(g, &p, d));
                return Ok((k, p));
            }
        }
    }
    unreachable!("k = 1 always succeeds")
}

fn check(g: &Graph, p: &VertexPartition, d: usize) -> bool {
    let r = if d == 1 {
        verify_transitive(g, p)
    } else {
        verify_2transitive(g, p)
    };
    r.unwrap_or(false)
}

/// Exact `Tr_2(g)` with a witness partition.
pub fn brute_tr2(g: &Graph, budget: u64) -> Result<(usize, VertexPartition)> {
    brute(g, 2, budget)
}

/// Exact `Tr(g)` with a witness partition.
pub fn brute_tr(g: &Graph, budget: u64) -> Result<(usize, VertexPartition)> {
    brute(g, 1, budget)
}

/// Largest `k` such that some 2-transitive partition of size `k` has `v`
/// in `V_k`.
pub fn brute_tr2_vertex(g: &Graph, v: usize, budget: u64) -> Result<(usize, VertexPartition)> {
    if v >= g.n() {
        return Err(Error::domain(format!("vertex {v} out of range")));
    }
    let mut nodes = 0;
    let top = (g.degree(v) / 2 + 1).min(degree_bound(g, 2));
    for k in (1..=top).rev() {
        if let Some(labels) = search_with_top(g, 2, k, v, &mut nodes, budget)? {
            return Ok((k, VertexPartition::from_labels(&labels)?));
        }
    }
    unreachable!("k = 1 always succeeds")
}

/// Brings a 2-transitive partition with `k >= 3` into canonical form:
/// `|V_k| = 1`, `|V_{k-1}| = 2` and `|V_{k-i}| <= 2 * 3^(i-1)`, moving
/// surplus vertices to `V_1`.
///
/// `V_k` keeps its smallest vertex; every earlier part keeps, for each
/// vertex of the later parts in id order, its two smallest neighbours there.
pub fn canonicalize_partition(g: &Graph, p: &VertexPartition) -> Result<VertexPartition> {
    let k = p.k();
    if k < 3 {
        return Err(Error::domain("canonicalization needs k >= 3"));
    }
    if !verify_2transitive(g, p)? {
        return Err(Error::domain("partition is not 2-transitive"));
    }
    let mut labels = p.labels();
    let mut kept: Vec<usize> = vec![p.part(k)[0]];
    for &v in &p.part(k)[1..] {
        labels[v] = 1;
    }
    for i in (2..k).rev() {
        let mut keep = Vec::new();
        for &w in &kept {
            keep.extend(
                g.neighbors(w)
                    .iter()
                    .copied()
                    .filter(|&x| labels[x] == i)
                    .take(2),
            );
        }
        keep.sort_unstable();
        keep.dedup();
        for &v in p.part(i) {
            if keep.binary_search(&v).is_err() {
                labels[v] = 1;
            }
        }
        kept.extend(keep);
        kept.sort_unstable();
    }
    let out = VertexPartition::from_labels(&labels)?;
    if out.k() != k || !verify_2transitive(g, &out)? {
        return Err(Error::Internal(
            "canonicalization broke the partition".into(),
        ));
    }
    Ok(out)
}

/// Pairs consecutive parts of a transitive partition into a 2-transitive
/// partition of size `⌈k/2⌉`.
pub fn fold_transitive(g: &Graph, p: &VertexPartition) -> Result<VertexPartition> {
    if !verify_transitive(g, p)? {
        return Err(Error::domain("partition is not transitive"));
    }
    let parts: Vec<Vec<usize>> = p.parts().chunks(2).map(|c| c.concat()).collect();
    let out = VertexPartition::from_parts(g.n(), parts)?;
    if !verify_2transitive(g, &out)? {
        return Err(Error::Internal(
            "folded partition is not 2-transitive".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn tr2(g: &Graph) -> usize {
        brute_tr2(g, DEFAULT_BUDGET).unwrap().0
    }

    fn k5_minus_matching() -> Graph {
        let g = generate::complete(5).unwrap();
        g.without_edge(0, 1).without_edge(2, 3)
    }

    #[test]
    fn known_values() {
        assert_eq!(tr2(&generate::complete(5).unwrap()), 3);
        assert_eq!(tr2(&generate::cycle(7).unwrap()), 2);
        assert_eq!(tr2(&k5_minus_matching()), 3);
    }

    #[test]
    fn transitivity_examples() {
        for n in 1..=6 {
            assert_eq!(
                brute_tr(&generate::complete(n).unwrap(), DEFAULT_BUDGET)
                    .unwrap()
                    .0,
                n
            );
        }
        assert_eq!(
            brute_tr(&generate::path(3).unwrap(), DEFAULT_BUDGET)
                .unwrap()
                .0,
            2
        );
        let t = generate::generate_cmbt(3).unwrap();
        assert_eq!(brute_tr(t.graph(), DEFAULT_BUDGET).unwrap().0, 3);
    }

    #[test]
    fn witnesses_verify() {
        let g = k5_minus_matching();
        let (k, p) = brute_tr2(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(p.k(), k);
        assert!(verify_2transitive(&g, &p).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let g = generate::complete(9).unwrap();
        assert_eq!(brute_tr2(&g, 3), Err(Error::Budget { budget: 3 }));
    }

    #[test]
    fn per_vertex_on_path() {
        let g = generate::path(5).unwrap();
        let t: Vec<usize> = (0..5)
            .map(|v| brute_tr2_vertex(&g, v, DEFAULT_BUDGET).unwrap().0)
            .collect();
        assert_eq!(t, vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn canonicalize_k7() {
        let g = generate::complete(7).unwrap();
        let p =
            VertexPartition::from_parts(7, vec![vec![0, 1, 2], vec![3, 4], vec![5, 6]]).unwrap();
        let c = canonicalize_partition(&g, &p).unwrap();
        let sizes: Vec<usize> = c.parts().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![4, 2, 1]);
        assert_eq!(canonicalize_partition(&g, &c).unwrap(), c);
        let two = VertexPartition::from_parts(7, vec![vec![0, 1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert!(canonicalize_partition(&g, &two).is_err());
    }

    #[test]
    fn fold_examples() {
        let k4 = generate::complete(4).unwrap();
        let single = |n: usize| (0..n).map(|v| vec![v]).collect::<Vec<_>>();
        let p = VertexPartition::from_parts(4, single(4)).unwrap();
        assert_eq!(
            fold_transitive(&k4, &p).unwrap().parts(),
            &[vec![0, 1], vec![2, 3]]
        );
        let k3 = generate::complete(3).unwrap();
        let p = VertexPartition::from_parts(3, single(3)).unwrap();
        assert_eq!(
            fold_transitive(&k3, &p).unwrap().parts(),
            &[vec![0, 1], vec![2]]
        );
        let one = VertexPartition::from_parts(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(fold_transitive(&k3, &one).unwrap(), one);
        let p3 = generate::path(3).unwrap();
        let bad = VertexPartition::from_parts(3, vec![vec![1], vec![0], vec![2]]).unwrap();
        assert!(fold_transitive(&p3, &bad).is_err());
    }
}
