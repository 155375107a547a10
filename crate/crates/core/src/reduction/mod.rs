//! Gadget graphs reducing proper 3-colouring (even edge count) to the
//! 2-transitivity decision problem, for chordal and bipartite targets, with
//! certificate converters in both directions.

mod bipartite;
mod chordal;
mod coloring;

pub use bipartite::build_bipartite_gadget;
pub use chordal::build_chordal_gadget;
pub use coloring::{is_proper_coloring, three_coloring};

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::generate::{self, grow_cmbt, CmbtShape};
use crate::graph::Graph;
use crate::oracle::canonicalize_partition;
use crate::partition::{verify_2transitive, VertexPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Chordal,
    Bipartite,
}

/// Role of a vertex of `G'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HandleClass {
    /// `v_i` and its primed copy.
    SourceVertex,
    /// `v_{e_t}` and its primed copy.
    EdgeRoot,
    /// Members of `A = {e_1..e_m, e}`.
    A,
    /// Members of `B = {e_1'..e_m', e', e''}`.
    B,
    /// Roots of the auxiliary trees.
    Auxiliary,
    /// Non-root vertices of any 2-cmbt gadget.
    Interior,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Handle {
    pub name: String,
    pub vertex: usize,
    pub class: HandleClass,
}

#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub variant: Variant,
    pub gprime: Graph,
    pub k: usize,
    /// One handle per vertex of `gprime`, indexed by vertex id.
    pub handles: Vec<Handle>,
    pub source_n: usize,
    /// Source edges in the order `e_1..e_m`.
    pub source_edges: Vec<(usize, usize)>,
    /// `v_i`, then `v_i'` for the bipartite variant.
    pub vertex_roots: Vec<Vec<usize>>,
    /// `v_{e_t}`, then `v_{e_t}'` for the bipartite variant.
    pub edge_roots: Vec<Vec<usize>>,
    /// `e_1..e_m`, then `e_1'..e_m'`.
    pub edge_vertices: Vec<Vec<usize>>,
    /// `e`, `e'`, `e''` as present.
    pub hubs: Vec<usize>,
    /// Auxiliary roots with their fixed class.
    pub aux: Vec<(usize, usize)>,
    /// Every 2-cmbt gadget, rooted at its handle vertex.
    pub gadgets: Vec<CmbtShape>,
}

impl ReductionOutput {
    /// Sidecar handle map: one `name vertex` line per vertex.
    pub fn handle_map(&self) -> String {
        let mut s = String::new();
        for h in &self.handles {
            writeln!(s, "{} {}", h.name, h.vertex).unwrap();
        }
        s
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.handles
            .iter()
            .find(|h| h.name == name)
            .map(|h| h.vertex)
    }
}

pub fn chordal_vertex_count(n: usize, m: usize) -> usize {
    10 * m + 9 * n + 27
}

pub fn chordal_edge_count(n: usize, m: usize) -> usize {
    (m * m + 29 * m) / 2 + 8 * n + 26
}

/// Vertex count stated alongside the bipartite construction.
pub fn bipartite_vertex_count_stated(n: usize, m: usize) -> usize {
    18 * m + 18 * n + 68
}

/// Vertex count obtained by summing the parts of the bipartite construction.
pub fn bipartite_vertex_count(n: usize, m: usize) -> usize {
    20 * m + 18 * n + 68
}

pub fn bipartite_edge_count(n: usize, m: usize) -> usize {
    m * m + 31 * m + 16 * n + 70
}

/// Incremental construction of `G'` with named vertices.
struct Builder {
    handles: Vec<Handle>,
    edges: Vec<(usize, usize)>,
    pending: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            handles: Vec::new(),
            edges: Vec::new(),
            pending: Vec::new(),
        }
    }

    fn add(&mut self, name: String, class: HandleClass) -> usize {
        let v = self.handles.len();
        self.handles.push(Handle {
            name,
            vertex: v,
            class,
        });
        v
    }

    /// Marks `root` to receive a 2-cmbt of `order` when interiors are grown.
    fn gadget(&mut self, root: usize, order: usize) {
        self.pending.push((root, order));
    }

    fn finish(mut self) -> (Graph, Vec<Handle>, Vec<CmbtShape>) {
        let mut shapes = Vec::new();
        for (root, order) in std::mem::take(&mut self.pending) {
            let mut next = self.handles.len();
            let start = next;
            let shape = grow_cmbt(root, order, &mut next, &mut self.edges);
            let root_name = self.handles[root].name.clone();
            let mut names = vec![String::new(); next - start];
            name_interior(&shape, &root_name, start, &mut names);
            for name in names {
                self.add(name, HandleClass::Interior);
            }
            shapes.push(shape);
        }
        let g = Graph::from_edges_trusted(self.handles.len(), &self.edges);
        (g, self.handles, shapes)
    }
}

fn name_interior(shape: &CmbtShape, prefix: &str, start: usize, names: &mut [String]) {
    for (i, child) in shape.children.iter().enumerate() {
        let name = format!("{prefix}/{}", i + 1);
        name_interior(child, &name, start, names);
        names[child.vertex - start] = name;
    }
}

fn check_source(g: &Graph) -> Result<()> {
    if g.m() < 2 || g.m() % 2 == 1 {
        return Err(Error::domain(format!(
            "the reduction needs an even number of edges (at least 2), got {}",
            g.m()
        )));
    }
    Ok(())
}

/// Classes of a 2-cmbt of `order` whose root sits in `target`, indexed by the
/// vertex ids of [`generate::generate_cmbt`].
pub fn cmbt_class_assignment(order: usize, target: usize) -> Result<Vec<usize>> {
    if target < 1 || target > order {
        return Err(Error::domain(format!(
            "target class {target} outside 1..={order}"
        )));
    }
    let (t, shape) = generate::cmbt_with_shape(order)?;
    let mut classes = vec![1; t.graph().n()];
    assign_cmbt(&shape, target, &mut classes);
    Ok(classes)
}

/// Root to `target`; the child pair of order `i < target` recursively to
/// `i`; everything else stays as initialised (class 1).
fn assign_cmbt(shape: &CmbtShape, target: usize, classes: &mut [usize]) {
    let mut stack = vec![(shape, target)];
    while let Some((node, class)) = stack.pop() {
        classes[node.vertex] = class;
        for (i, child) in node.children.iter().enumerate() {
            let child_order = i / 2 + 1;
            if child_order < class {
                stack.push((child, child_order));
            }
        }
    }
}

/// Builds the size-`k` partition of `G'` from a proper 3-colouring of the
/// source graph (colours 1, 2, 3).
pub fn coloring_to_partition(r: &ReductionOutput, coloring: &[usize]) -> Result<VertexPartition> {
    if coloring.len() != r.source_n {
        return Err(Error::domain(
            "colouring length differs from the source graph",
        ));
    }
    if coloring.iter().any(|&c| !(1..=3).contains(&c)) {
        return Err(Error::domain("colours must lie in 1..=3"));
    }
    if !is_proper_coloring(&r.source_edges, coloring) {
        return Err(Error::domain("colouring is not proper"));
    }

    let mut classes = vec![1usize; r.gprime.n()];
    for copy in &r.vertex_roots {
        for (i, &v) in copy.iter().enumerate() {
            classes[v] = coloring[i];
        }
    }
    for copy in &r.edge_roots {
        for (t, &v) in copy.iter().enumerate() {
            let (a, b) = r.source_edges[t];
            classes[v] = 6 - coloring[a] - coloring[b];
        }
    }
    for &(v, c) in &r.aux {
        classes[v] = c;
    }
    for copy in &r.edge_vertices {
        for (t, &v) in copy.iter().enumerate() {
            classes[v] = 4 + t / 2;
        }
    }
    let m = r.source_edges.len();
    match r.variant {
        Variant::Chordal => classes[r.hubs[0]] = r.k,
        Variant::Bipartite => {
            classes[r.hubs[0]] = r.k;
            classes[r.hubs[1]] = m / 2 + 4;
            classes[r.hubs[2]] = m / 2 + 4;
        }
    }
    for shape in &r.gadgets {
        let target = classes[shape.vertex];
        assign_cmbt(shape, target, &mut classes);
    }

    let p = VertexPartition::from_labels(&classes)?;
    if p.k() != r.k || !verify_2transitive(&r.gprime, &p)? {
        return Err(Error::Internal(
            "forward partition failed verification".into(),
        ));
    }
    Ok(p)
}

/// Reads a proper 3-colouring of the source graph off a 2-transitive
/// partition of `G'` of size at least `k`, after canonicalizing it.
pub fn partition_to_coloring(r: &ReductionOutput, p: &VertexPartition) -> Result<Vec<usize>> {
    if p.n() != r.gprime.n() {
        return Err(Error::domain("partition does not cover G'"));
    }
    if p.k() < r.k {
        return Err(Error::domain(format!(
            "partition has {} parts, fewer than k = {}",
            p.k(),
            r.k
        )));
    }
    if !verify_2transitive(&r.gprime, p)? {
        return Err(Error::Certificate("partition is not 2-transitive".into()));
    }
    let canon = canonicalize_partition(&r.gprime, p)?;
    let labels = canon.labels();
    let coloring: Vec<usize> = r.vertex_roots[0].iter().map(|&v| labels[v]).collect();
    if let Some(i) = coloring.iter().position(|&c| c > 3) {
        return Err(Error::Certificate(format!(
            "v{} lies in part {}, outside 1..=3",
            i + 1,
            coloring[i]
        )));
    }
    if !is_proper_coloring(&r.source_edges, &coloring) {
        return Err(Error::Certificate("induced colouring is not proper".into()));
    }
    Ok(coloring)
}
