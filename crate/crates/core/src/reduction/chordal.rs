use super::{check_source, Builder, HandleClass, ReductionOutput, Variant};
use crate::error::Result;
use crate::graph::Graph;

/// Chordal target: one 2-cmbt_3 per source vertex and edge, the clique
/// `A = {e_1..e_m, e}`, and six auxiliary trees; `k = m/2 + 4`.
pub fn build_chordal_gadget(g: &Graph) -> Result<ReductionOutput> {
    check_source(g)?;
    let (n, source_edges) = (g.n(), g.edge_vec());
    let m = source_edges.len();
    let mut b = Builder::new();

    let v: Vec<usize> = (1..=n)
        .map(|i| b.add(format!("v{i}"), HandleClass::SourceVertex))
        .collect();
    let ve: Vec<usize> = (1..=m)
        .map(|t| b.add(format!("v_e{t}"), HandleClass::EdgeRoot))
        .collect();
    let a: Vec<usize> = (1..=m)
        .map(|t| b.add(format!("e{t}"), HandleClass::A))
        .collect();
    let e = b.add("e".into(), HandleClass::A);
    let roots = [
        ("v_a", 3),
        ("e_a", 3),
        ("v_e", 2),
        ("e_b", 2),
        ("v_b", 1),
        ("e_c", 1),
    ];
    let aux: Vec<(usize, usize)> = roots
        .iter()
        .map(|&(name, class)| (b.add(name.into(), HandleClass::Auxiliary), class))
        .collect();

    let mut clique = a.clone();
    clique.push(e);
    for j in 1..clique.len() {
        for i in 0..j {
            b.edges.push((clique[i], clique[j]));
        }
    }
    for (t, &(x, y)) in source_edges.iter().enumerate() {
        b.edges.extend([(v[x], a[t]), (v[y], a[t]), (ve[t], a[t])]);
    }
    // e_a, e_b, e_c see all of A; v_a, v_e, v_b see e.
    for &(r, _) in &aux[..] {
        if b.handles[r].name.starts_with("e_") {
            b.edges.extend(clique.iter().map(|&w| (r, w)));
        } else {
            b.edges.push((r, e));
        }
    }

    for &r in v.iter().chain(&ve) {
        b.gadget(r, 3);
    }
    for &(r, class) in &aux {
        b.gadget(r, class);
    }
    let (gprime, handles, gadgets) = b.finish();

    Ok(ReductionOutput {
        variant: Variant::Chordal,
        gprime,
        k: m / 2 + 4,
        handles,
        source_n: n,
        source_edges,
        vertex_roots: vec![v],
        edge_roots: vec![ve],
        edge_vertices: vec![a],
        hubs: vec![e],
        aux,
        gadgets,
    })
}
