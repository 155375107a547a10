use crate::classes::degree_order;
use crate::graph::Graph;

pub fn is_proper_coloring(edges: &[(usize, usize)], coloring: &[usize]) -> bool {
    edges.iter().all(|&(u, v)| coloring[u] != coloring[v])
}

/// A proper colouring with colours 1..=3 found by backtracking, or `None`.
pub fn three_coloring(g: &Graph) -> Option<Vec<usize>> {
    let order = degree_order(g, 0..g.n());
    let mut color = vec![0usize; g.n()];
    fn go(g: &Graph, order: &[usize], idx: usize, color: &mut [usize]) -> bool {
        let Some(&v) = order.get(idx) else {
            return true;
        };
        for c in 1..=3 {
            if g.neighbors(v).iter().all(|&w| color[w] != c) {
                color[v] = c;
                if go(g, order, idx + 1, color) {
                    return true;
                }
            }
        }
        color[v] = 0;
        false
    }
    go(g, &order, 0, &mut color).then_some(color)
}
