//! 2-transitivity of split graphs.

use crate::classes::SplitDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{verify_2transitive, VertexPartition};

/// Grows `K` to a maximum clique by moving in an `S` vertex adjacent to all
/// of `K`, if any. One move suffices.
pub fn maximize_clique(d: &SplitDecomposition, g: &Graph) -> Result<SplitDecomposition> {
    d.verify(g)?;
    let kk = d.clique.len();
    let mut out = d.clone();
    out.clique.sort_unstable();
    out.independent.sort_unstable();
    if let Some(pos) = out.independent.iter().position(|&s| g.degree(s) == kk) {
        let s = out.independent.remove(pos);
        let at = out.clique.partition_point(|&v| v < s);
        out.clique.insert(at, s);
    }
    Ok(out)
}

/// Number of `S` neighbours of a clique vertex.
pub fn s_degree(g: &Graph, d: &SplitDecomposition, v: usize) -> usize {
    g.degree(v) + 1 - d.clique.len()
}

/// `Tr_2` of a connected split graph from a maximum decomposition, with a
/// verified witness.
pub fn tr2_split(g: &Graph, d: &SplitDecomposition) -> Result<(usize, VertexPartition)> {
    d.verify(g)?;
    if !g.is_connected() {
        return Err(Error::domain("split solver needs a connected graph"));
    }
    let omega = d.clique.len();
    if d.independent.iter().any(|&s| g.degree(s) == omega) {
        return Err(Error::domain("split decomposition is not maximal"));
    }
    let mut clique = d.clique.clone();
    clique.sort_unstable();
    let sdeg = |v: usize| s_degree(g, d, v);

    let base = omega.div_ceil(2);
    let mut parts: Vec<Vec<usize>>;
    let plus = if omega % 2 == 1 {
        clique.iter().all(|&v| sdeg(v) >= 2)
    } else {
        clique.iter().filter(|&&v| sdeg(v) >= 1).count() + 1 >= omega
    };

    if !plus {
        parts = clique.chunks(2).map(<[usize]>::to_vec).collect();
        parts[0].extend(&d.independent);
    } else if omega % 2 == 1 {
        parts = vec![d.independent.clone()];
        parts.extend(clique.chunks(2).map(<[usize]>::to_vec));
    } else {
        let mut by_sdeg = clique.clone();
        by_sdeg.sort_by_key(|&v| (std::cmp::Reverse(sdeg(v)), v));
        let rest = by_sdeg.pop().expect("even clique is nonempty");
        by_sdeg.sort_unstable();
        let mut first = d.independent.clone();
        first.push(rest);
        parts = vec![first];
        parts.extend(by_sdeg.chunks(2).map(<[usize]>::to_vec));
    }

    let k = base + plus as usize;
    let p = VertexPartition::from_parts(g.n(), parts)?;
    if p.k() != k || !verify_2transitive(g, &p)? {
        return Err(Error::Internal("split witness failed verification".into()));
    }
    Ok((k, p))
}
