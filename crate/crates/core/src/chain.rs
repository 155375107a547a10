//! 2-transitivity of bipartite chain graphs.
//!
//! Under a chain ordering with each side sorted by non-increasing degree,
//! `x_i ~ y_j` iff `j <= deg(x_i)`, so every pattern test is a degree
//! comparison.

use crate::classes::ChainOrdering;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{verify_2transitive, VertexPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BicliqueKind {
    Full,
    MinusE,
}

/// Largest induced `K_{t,t}` or `K_{t,t} \ e` and the two boundary
/// adjacencies `x_t ~ y_{t+1}` and `x_{t+1} ~ y_t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BicliqueParams {
    pub t: usize,
    pub kind: BicliqueKind,
    pub ext: (bool, bool),
}

struct Staircase {
    xdeg: Vec<usize>,
    ydeg: Vec<usize>,
}

impl Staircase {
    fn new(g: &Graph, ord: &ChainOrdering) -> Result<Self> {
        ord.verify(g)?;
        let xdeg: Vec<usize> = ord.x_order.iter().map(|&v| g.degree(v)).collect();
        let ydeg: Vec<usize> = ord.y_order.iter().map(|&v| g.degree(v)).collect();
        Ok(Staircase { xdeg, ydeg })
    }

    /// `x_a ~ y_b`, 1-based, false outside the sides.
    fn adj(&self, a: usize, b: usize) -> bool {
        a >= 1 && b >= 1 && a <= self.xdeg.len() && b <= self.ydeg.len() && b <= self.xdeg[a - 1]
    }
}

pub fn max_biclique_params(g: &Graph, ord: &ChainOrdering) -> Result<BicliqueParams> {
    let s = Staircase::new(g, ord)?;
    let top = s.xdeg.len().min(s.ydeg.len());
    let t_full = (1..=top).take_while(|&a| s.adj(a, a)).last().unwrap_or(0);
    let t_minus = (2..=top)
        .rev()
        .find(|&a| !s.adj(a, a) && s.adj(a - 1, a) && s.adj(a, a - 1))
        .unwrap_or(0);
    let (t, kind) = if t_full >= t_minus {
        (t_full, BicliqueKind::Full)
    } else {
        (t_minus, BicliqueKind::MinusE)
    };
    let ext = (s.adj(t, t + 1), s.adj(t + 1, t));
    if kind == BicliqueKind::Full && ext.0 && ext.1 {
        return Err(Error::Internal(format!(
            "both boundary edges present at maximal t = {t}"
        )));
    }
    Ok(BicliqueParams { t, kind, ext })
}

/// The closed form stated in terms of `Tr = t + 1`: `⌊Tr/2⌋ + 1` for a full
/// biclique with exactly one boundary edge, `⌊(Tr-1)/2⌋ + 1` otherwise.
///
/// This disagrees with the true value on some chain graphs, for example
/// `K_{4,3} \ C4`; [`tr2_chain`] does not use it.
pub fn biclique_formula(p: &BicliqueParams) -> usize {
    let tr = p.t + 1;
    if p.kind == BicliqueKind::Full && (p.ext.0 ^ p.ext.1) {
        tr / 2 + 1
    } else {
        (tr - 1) / 2 + 1
    }
}

/// Largest `s` such that the prefixes `big_1..big_{2s}` and
/// `small_1..small_{2s-1}` host `K_{2s,2s-1} \ C4` with the missing
/// 4-cycle on the last two vertices of each prefix.
fn best_s(big: &[usize], small_len: usize) -> usize {
    let mut best = 0;
    let mut s = 1;
    while 2 * s <= big.len() && 2 * s - 1 <= small_len {
        let last_ok = big[2 * s - 1] >= (2 * s).saturating_sub(3).max(1);
        let inner_ok = s < 2 || big[2 * s - 3] >= 2 * s - 1;
        if last_ok && inner_ok {
            best = s;
        }
        s += 1;
    }
    best
}

/// `Tr_2` of a connected chain graph with a verified witness.
///
/// `Tr_2 = s + 1` for the largest `s` such that `G` contains
/// `K_{2s,2s-1} \ C4` as a subgraph, either side playing the larger role.
pub fn tr2_chain(g: &Graph, ord: &ChainOrdering) -> Result<(usize, VertexPartition)> {
    let st = Staircase::new(g, ord)?;
    if !g.is_connected() {
        return Err(Error::domain("chain solver needs a connected graph"));
    }
    let sx = best_s(&st.xdeg, st.ydeg.len());
    let sy = best_s(&st.ydeg, st.xdeg.len());
    let (s, big, small) = if sx >= sy {
        (sx, &ord.x_order, &ord.y_order)
    } else {
        (sy, &ord.y_order, &ord.x_order)
    };
    let k = s + 1;
    let mut labels = vec![1usize; g.n()];
    if s >= 1 {
        labels[small[0]] = k;
        labels[big[0]] = k - 1;
        labels[big[1]] = k - 1;
        for i in 2..=s {
            for v in [
                big[2 * i - 2],
                big[2 * i - 1],
                small[2 * i - 3],
                small[2 * i - 2],
            ] {
                labels[v] = k - i;
            }
        }
    }
    let p = VertexPartition::from_labels(&labels)?;
    if p.k() != k || !verify_2transitive(g, &p)? {
        return Err(Error::Internal("chain witness failed verification".into()));
    }
    Ok((k, p))
}
