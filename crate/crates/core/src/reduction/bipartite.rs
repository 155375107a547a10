use super::{check_source, Builder, HandleClass, ReductionOutput, Variant};
use crate::error::Result;
use crate::graph::Graph;

fn primes(copy: usize) -> &'static str {
    ["", "'", "''"][copy]
}

/// Bipartite target: doubled vertex and edge gadgets, the biclique between
/// `A = {e_1..e_m, e}` and `B = {e_1'..e_m', e', e''}`, and fifteen
/// auxiliary trees; `k = m/2 + 5`.
///
/// The per-edge edge list attaches `v_j'` (not `v_j`) to `e_t'`, and
/// `{v_a', v_e', v_b'}` attach to `e'`.
pub fn build_bipartite_gadget(g: &Graph) -> Result<ReductionOutput> {
    check_source(g)?;
    let (n, source_edges) = (g.n(), g.edge_vec());
    let m = source_edges.len();
    let mut b = Builder::new();

    let v: Vec<Vec<usize>> = (0..2)
        .map(|c| {
            (1..=n)
                .map(|i| b.add(format!("v{i}{}", primes(c)), HandleClass::SourceVertex))
                .collect()
        })
        .collect();
    let ve: Vec<Vec<usize>> = (0..2)
        .map(|c| {
            (1..=m)
                .map(|t| b.add(format!("v_e{t}{}", primes(c)), HandleClass::EdgeRoot))
                .collect()
        })
        .collect();
    let a: Vec<usize> = (1..=m)
        .map(|t| b.add(format!("e{t}"), HandleClass::A))
        .collect();
    let e = b.add("e".into(), HandleClass::A);
    let bb: Vec<usize> = (1..=m)
        .map(|t| b.add(format!("e{t}'"), HandleClass::B))
        .collect();
    let e1 = b.add("e'".into(), HandleClass::B);
    let e2 = b.add("e''".into(), HandleClass::B);

    let mut aux = Vec::new();
    let mut hub_attach: Vec<Vec<usize>> = vec![Vec::new(); 3];
    let mut a_attach = Vec::new();
    let mut b_attach = Vec::new();
    for (base, class) in [("a", 3), ("e", 2), ("b", 1)] {
        for (c, attach) in hub_attach.iter_mut().enumerate() {
            let r = b.add(format!("v_{base}{}", primes(c)), HandleClass::Auxiliary);
            attach.push(r);
            aux.push((r, class));
        }
        let ebase = match base {
            "a" => "a",
            "e" => "b",
            _ => "c",
        };
        for c in 0..2 {
            let r = b.add(format!("e_{ebase}{}", primes(c)), HandleClass::Auxiliary);
            if c == 0 {
                b_attach.push(r);
            } else {
                a_attach.push(r);
            }
            aux.push((r, class));
        }
    }

    let mut side_a = a.clone();
    side_a.push(e);
    let mut side_b = bb.clone();
    side_b.extend([e1, e2]);
    for &x in &side_a {
        for &y in &side_b {
            b.edges.push((x, y));
        }
    }
    for (t, &(x, y)) in source_edges.iter().enumerate() {
        b.edges.extend([
            (v[0][x], a[t]),
            (v[0][y], a[t]),
            (ve[0][t], a[t]),
            (v[1][x], bb[t]),
            (v[1][y], bb[t]),
            (ve[1][t], bb[t]),
        ]);
    }
    for &r in &b_attach {
        b.edges.extend(side_b.iter().map(|&w| (r, w)));
    }
    for &r in &a_attach {
        b.edges.extend(side_a.iter().map(|&w| (r, w)));
    }
    for (hub, roots) in [e, e1, e2].into_iter().zip(&hub_attach) {
        b.edges.extend(roots.iter().map(|&r| (r, hub)));
    }

    for &r in v.iter().flatten().chain(ve.iter().flatten()) {
        b.gadget(r, 3);
    }
    for &(r, class) in &aux {
        b.gadget(r, class);
    }
    let (gprime, handles, gadgets) = b.finish();

    Ok(ReductionOutput {
        variant: Variant::Bipartite,
        gprime,
        k: m / 2 + 5,
        handles,
        source_n: n,
        source_edges,
        vertex_roots: v,
        edge_roots: ve,
        edge_vertices: vec![a, bb],
        hubs: vec![e, e1, e2],
        aux,
        gadgets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::bipartition;
    use crate::generate;
    use crate::reduction::{
        bipartite_edge_count, bipartite_vertex_count, coloring_to_partition, partition_to_coloring,
    };

    #[test]
    fn c4_counts_and_certificates() {
        let g = generate::cycle(4).unwrap();
        let r = build_bipartite_gadget(&g).unwrap();
        assert_eq!(r.gprime.m(), 274);
        assert_eq!(r.gprime.m(), bipartite_edge_count(4, 4));
        assert_eq!(r.gprime.n(), bipartite_vertex_count(4, 4));
        assert_eq!(r.k, 7);
        assert!(bipartition(&r.gprime).is_some());
        let p = coloring_to_partition(&r, &[1, 2, 1, 2]).unwrap();
        assert_eq!(p.k(), 7);
        assert_eq!(partition_to_coloring(&r, &p).unwrap(), vec![1, 2, 1, 2]);
    }

    #[test]
    fn handles_are_distinct() {
        let r = build_bipartite_gadget(&generate::cycle(4).unwrap()).unwrap();
        let mut names: Vec<&str> = r.handles.iter().map(|h| h.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), r.gprime.n());
        assert_eq!(r.vertex("e''"), Some(r.hubs[2]));
        assert!(r.vertex("v_b''").is_some());
    }
}
