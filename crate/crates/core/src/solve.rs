//! Per-component dispatch to the specialised solvers or the oracle.

use std::fmt;
use std::str::FromStr;

use crate::chain::tr2_chain;
use crate::classes::{chain_ordering, recognize, split_decomposition, GraphClass, RootedTree};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::brute_tr2;
use crate::partition::VertexPartition;
use crate::split::tr2_split;
use crate::tree::{extract_tree_witness, solve_tree};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Auto,
    Tree,
    Split,
    Chain,
    Brute,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Auto => "auto",
            Method::Tree => "tree",
            Method::Split => "split",
            Method::Chain => "chain",
            Method::Brute => "brute",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Method::Auto,
            "tree" => Method::Tree,
            "split" => Method::Split,
            "chain" => Method::Chain,
            "brute" => Method::Brute,
            _ => return Err(Error::domain(format!("unknown method {s:?}"))),
        })
    }
}

#[derive(Clone, Debug)]
pub struct ComponentResult {
    /// Vertex ids in the input graph, sorted.
    pub vertices: Vec<usize>,
    /// The solver actually used.
    pub method: Method,
    pub k: usize,
    /// Witness over the component's local ids.
    pub witness: VertexPartition,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub components: Vec<ComponentResult>,
    pub tr2: usize,
    /// Witness for the whole graph: the first component reaching `tr2`
    /// keeps its parts, every other vertex goes to `V_1`.
    pub witness: VertexPartition,
}

/// Solves a connected graph with `method`.
pub fn solve_connected(
    g: &Graph,
    method: Method,
    budget: u64,
) -> Result<(Method, usize, VertexPartition)> {
    let unsuitable = |what: &str| Error::domain(format!("graph is not a {what}"));
    match method {
        Method::Auto => match recognize(g)? {
            GraphClass::Tree(t) => solve_tree_with_witness(&t),
            GraphClass::Split(d) => tr2_split(g, &d).map(|(k, p)| (Method::Split, k, p)),
            GraphClass::Chain(o) => tr2_chain(g, &o).map(|(k, p)| (Method::Chain, k, p)),
            GraphClass::General => brute_tr2(g, budget).map(|(k, p)| (Method::Brute, k, p)),
        },
        Method::Tree => {
            let t = RootedTree::new(g.clone(), 0).map_err(|_| unsuitable("tree"))?;
            solve_tree_with_witness(&t)
        }
        Method::Split => {
            let d = split_decomposition(g).ok_or_else(|| unsuitable("split graph"))?;
            tr2_split(g, &d).map(|(k, p)| (Method::Split, k, p))
        }
        Method::Chain => {
            let o = chain_ordering(g).ok_or_else(|| unsuitable("bipartite chain graph"))?;
            tr2_chain(g, &o).map(|(k, p)| (Method::Chain, k, p))
        }
        Method::Brute => brute_tr2(g, budget).map(|(k, p)| (Method::Brute, k, p)),
    }
}

fn solve_tree_with_witness(t: &RootedTree) -> Result<(Method, usize, VertexPartition)> {
    let state = solve_tree(t);
    let k = state.tr2();
    let v = state
        .t2
        .iter()
        .position(|&x| x == k)
        .expect("nonempty tree");
    let p = extract_tree_witness(t, &state, v)?;
    Ok((Method::Tree, k, p))
}

/// Solves every component and aggregates by maximum.
pub fn solve(g: &Graph, method: Method, budget: u64) -> Result<SolveResult> {
    if g.n() == 0 {
        return Err(Error::domain("empty graph"));
    }
    let mut components = Vec::new();
    for vertices in g.components() {
        let sub = g.induced_subgraph(&vertices);
        let (used, k, witness) = solve_connected(&sub, method, budget)?;
        components.push(ComponentResult {
            vertices,
            method: used,
            k,
            witness,
        });
    }
    let best = components
        .iter()
        .max_by_key(|c| (c.k, std::cmp::Reverse(c.vertices[0])))
        .expect("at least one component");
    let mut labels = vec![1; g.n()];
    for (local, &v) in best.witness.labels().iter().zip(&best.vertices) {
        labels[v] = *local;
    }
    let witness = VertexPartition::from_labels(&labels)?;
    Ok(SolveResult {
        tr2: best.k,
        components,
        witness,
    })
}
