//! Linear-time 2-transitive numbers of all vertices of a tree.
//!
//! A bottom-up pass computes rooted numbers, then a top-down pass reroots at
//! every vertex. The rooted number of a parent `y` seen from its child `c`
//! is `t2(y) - R(c)`, where `R(c)` says whether `c` is required for `y` to
//! reach `t2(y)`.

use crate::classes::RootedTree;
use crate::error::{Error, Result};
use crate::partition::{verify_2transitive, VertexPartition};

/// Greedy pairing over a sorted slice, smallest value first.
fn greedy(values: &[usize]) -> usize {
    let mut t = 1;
    let mut j = 0;
    for &l in values {
        if l >= t {
            j += 1;
            if j == 2 {
                t += 1;
                j = 0;
            }
        }
    }
    t
}

/// Required flags over a sorted slice, for `z = greedy(values)`.
fn mark(z: usize, values: &[usize]) -> Vec<bool> {
    let k = values.len();
    let o = k + 2 - 2 * z;
    let mut out = vec![false; k];
    let mut failed = false;
    for i in o + 1..=k {
        if !failed {
            let need = (i - o).div_ceil(2);
            failed = i < 2 || values[i - 2] < need;
        }
        out[i - 1] = failed;
    }
    out
}

fn check_sorted(values: &[usize]) -> Result<()> {
    if values.contains(&0) {
        return Err(Error::domain("rooted numbers are at least 1"));
    }
    if values.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::domain("values must be sorted non-decreasing"));
    }
    Ok(())
}

/// 2-transitive number of a vertex whose neighbours have the given rooted
/// numbers, sorted non-decreasing.
pub fn two_transitive_number(values: &[usize]) -> Result<usize> {
    check_sorted(values)?;
    Ok(greedy(values))
}

/// Required flags of the children with the given sorted rooted numbers, for
/// a parent whose 2-transitive number is `z`.
pub fn mark_required(z: usize, values: &[usize]) -> Result<Vec<bool>> {
    check_sorted(values)?;
    let actual = greedy(values);
    if z != actual {
        return Err(Error::domain(format!(
            "z = {z} but the values give a 2-transitive number of {actual}"
        )));
    }
    Ok(mark(z, values))
}

/// Per-vertex results of [`solve_tree`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeSolveState {
    pub root: usize,
    /// `t2r(v, T^root)`.
    pub rooted_t2: Vec<usize>,
    /// `t2(v, T)`.
    pub t2: Vec<usize>,
    /// `R(v)` as a child of its parent, evaluated over the parent's full
    /// neighbourhood; false at the root.
    pub required: Vec<bool>,
    /// `t2r(parent(v), T^v)`; 0 at the root.
    pub parent_value: Vec<usize>,
}

impl TreeSolveState {
    pub fn tr2(&self) -> usize {
        self.t2.iter().copied().max().unwrap_or(0)
    }

    /// Every neighbour `w` of `x` with `t2r(w, T^x)`.
    pub fn neighbour_values(&self, t: &RootedTree, x: usize) -> Vec<(usize, usize)> {
        t.graph()
            .neighbors(x)
            .iter()
            .map(|&w| {
                if t.parent(x) == Some(w) {
                    (w, self.parent_value[x])
                } else {
                    (w, self.rooted_t2[w])
                }
            })
            .collect()
    }
}

/// Stable counting sort of `(vertex, value)` pairs by value clamped to `cap`.
fn bucket_sort(items: &mut Vec<(usize, usize)>, cap: usize, scratch: &mut Vec<usize>) {
    scratch.clear();
    scratch.resize(cap + 2, 0);
    for &(_, l) in items.iter() {
        scratch[l.min(cap) + 1] += 1;
    }
    for i in 1..scratch.len() {
        scratch[i] += scratch[i - 1];
    }
    let mut out = vec![(0, 0); items.len()];
    for &(v, l) in items.iter() {
        let c = l.min(cap);
        out[scratch[c]] = (v, c);
        scratch[c] += 1;
    }
    *items = out;
}

const PARENT: usize = usize::MAX;

pub fn solve_tree(t: &RootedTree) -> TreeSolveState {
    let g = t.graph();
    let n = g.n();
    let mut rooted_t2 = vec![1; n];
    let mut items: Vec<(usize, usize)> = Vec::new();
    let mut values: Vec<usize> = Vec::new();
    let mut scratch = Vec::new();

    for &v in t.bfs_order().iter().rev() {
        items.clear();
        items.extend(t.children(v).map(|c| (c, rooted_t2[c])));
        bucket_sort(&mut items, g.degree(v) + 1, &mut scratch);
        values.clear();
        values.extend(items.iter().map(|&(_, l)| l));
        rooted_t2[v] = greedy(&values);
    }

    let mut t2 = vec![0; n];
    let mut required = vec![false; n];
    let mut parent_value = vec![0; n];
    for &x in t.bfs_order() {
        items.clear();
        items.extend(t.children(x).map(|c| (c, rooted_t2[c])));
        if t.parent(x).is_some() {
            items.push((PARENT, parent_value[x]));
        }
        bucket_sort(&mut items, g.degree(x) + 1, &mut scratch);
        values.clear();
        values.extend(items.iter().map(|&(_, l)| l));
        let z = greedy(&values);
        t2[x] = z;
        for (&(c, _), r) in items.iter().zip(mark(z, &values)) {
            if c != PARENT {
                required[c] = r;
                parent_value[c] = z - r as usize;
            }
        }
    }

    TreeSolveState {
        root: t.root(),
        rooted_t2,
        t2,
        required,
        parent_value,
    }
}

/// A 2-transitive partition of size `t2(v)` with `v` in the last part.
pub fn extract_tree_witness(
    t: &RootedTree,
    state: &TreeSolveState,
    v: usize,
) -> Result<VertexPartition> {
    let g = t.graph();
    if v >= g.n() {
        return Err(Error::domain(format!("vertex {v} out of range")));
    }
    let rt = t.reroot(v)?;
    let local = solve_rooted_only(&rt);
    let target = state.t2[v];
    if local[v] != target {
        return Err(Error::Internal(format!(
            "rerooted number {} disagrees with t2 = {target}",
            local[v]
        )));
    }

    let mut labels = vec![1usize; g.n()];
    let mut stack = vec![(v, target)];
    let mut kids: Vec<(usize, usize)> = Vec::new();
    while let Some((x, level)) = stack.pop() {
        labels[x] = level;
        if level == 1 {
            continue;
        }
        kids.clear();
        kids.extend(rt.children(x).map(|c| (c, local[c])));
        kids.sort_by_key(|&(c, l)| (l, c));
        let mut t_level = 1;
        let mut j = 0;
        for &(c, l) in &kids {
            if t_level == level {
                break;
            }
            if l >= t_level {
                if t_level > 1 {
                    stack.push((c, t_level));
                }
                j += 1;
                if j == 2 {
                    t_level += 1;
                    j = 0;
                }
            }
        }
        if t_level != level {
            return Err(Error::Internal(format!(
                "vertex {x} cannot reach level {level}"
            )));
        }
    }

    let p = VertexPartition::from_labels(&labels)?;
    if p.k() != target || !verify_2transitive(g, &p)? {
        return Err(Error::Internal("tree witness failed verification".into()));
    }
    Ok(p)
}

fn solve_rooted_only(t: &RootedTree) -> Vec<usize> {
    let mut rooted = vec![1; t.graph().n()];
    let mut values = Vec::new();
    for &v in t.bfs_order().iter().rev() {
        values.clear();
        values.extend(t.children(v).map(|c| rooted[c]));
        values.sort_unstable();
        rooted[v] = greedy(&values);
    }
    rooted
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::Graph;

    #[test]
    fn greedy_examples() {
        assert_eq!(two_transitive_number(&[]).unwrap(), 1);
        assert_eq!(two_transitive_number(&[1, 1, 2, 2]).unwrap(), 3);
        assert_eq!(two_transitive_number(&[1, 1, 1, 1]).unwrap(), 2);
        assert!(two_transitive_number(&[2, 1]).is_err());
        assert!(two_transitive_number(&[0, 1]).is_err());
    }

    #[test]
    fn required_examples() {
        assert_eq!(mark_required(2, &[1, 1]).unwrap(), vec![true, true]);
        assert_eq!(mark_required(2, &[1, 1, 1]).unwrap(), vec![false; 3]);
        assert!(mark_required(2, &[1, 1, 5, 5]).is_err());
        assert_eq!(mark_required(3, &[1, 1, 5, 5]).unwrap(), vec![true; 4]);
        assert_eq!(mark_required(1, &[]).unwrap(), Vec::<bool>::new());
    }

    #[test]
    fn path_and_singletons() {
        let t = RootedTree::new(generate::path(5).unwrap(), 0).unwrap();
        let s = solve_tree(&t);
        assert_eq!(s.t2, vec![1, 2, 2, 2, 1]);
        assert_eq!(s.tr2(), 2);
        let k1 = RootedTree::new(Graph::empty(1), 0).unwrap();
        assert_eq!(solve_tree(&k1).tr2(), 1);
    }

    #[test]
    fn cmbt_orders() {
        for k in 1..=5 {
            let t = generate::generate_cmbt(k).unwrap();
            let s = solve_tree(&t);
            assert_eq!(s.tr2(), k);
            assert_eq!(s.t2[t.root()], k);
        }
    }

    #[test]
    fn witnesses() {
        let star = RootedTree::new(generate::complete_bipartite(1, 4).unwrap(), 0).unwrap();
        let s = solve_tree(&star);
        let p = extract_tree_witness(&star, &s, 0).unwrap();
        assert_eq!(p.parts(), &[vec![1, 2, 3, 4], vec![0]]);
        let leaf = extract_tree_witness(&star, &s, 3).unwrap();
        assert_eq!(leaf.k(), 1);

        let (t, shape) = generate::cmbt_with_shape(3).unwrap();
        let s = solve_tree(&t);
        let p = extract_tree_witness(&t, &s, 0).unwrap();
        assert_eq!(p.k(), 3);
        let kids: Vec<usize> = shape.children.iter().map(|c| c.vertex).collect();
        let labels = p.labels();
        assert_eq!(
            kids.iter().map(|&c| labels[c]).collect::<Vec<_>>(),
            vec![1, 1, 2, 2]
        );
    }
}
