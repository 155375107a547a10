//! Upper bounds, closed forms for standard families, and witness
//! certification reports.

use std::fmt;

use crate::classes::{bipartition, has_p3};
use crate::graph::Graph;
use crate::partition::{first_violation, VertexPartition};

/// `⌊Δ/2⌋ + 1`.
pub fn delta_upper_bound(g: &Graph) -> usize {
    g.max_degree() / 2 + 1
}

/// Family detected by [`closed_form`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
}

/// Recognizes `K_n`, `P_n`, `C_n` and `K_{a,b}` (with `a >= b`) from degrees
/// and connectivity. Complete graphs win over the other families.
pub fn family(g: &Graph) -> Option<Family> {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return None;
    }
    if 2 * g.m() == n * (n - 1) {
        return Some(Family::Complete(n));
    }
    let deg2 = (0..n).filter(|&v| g.degree(v) == 2).count();
    if g.max_degree() == 2 {
        if g.m() + 1 == n && deg2 == n - 2 {
            return Some(Family::Path(n));
        }
        if g.m() == n && deg2 == n {
            return Some(Family::Cycle(n));
        }
    }
    let side = bipartition(g)?;
    let x = side.iter().filter(|&&s| !s).count();
    let (a, b) = (x.max(n - x), x.min(n - x));
    (g.m() == a * b).then_some(Family::CompleteBipartite(a, b))
}

/// Exact `Tr_2` for the families of [`family`].
///
/// For `K_{a,b}` with `a >= b` the value is `⌈b/2⌉ + 1` when `a > b` and
/// `⌊b/2⌋ + 1` when `a = b`.
pub fn closed_form(g: &Graph) -> Option<usize> {
    Some(match family(g)? {
        Family::Complete(n) => (n - 1) / 2 + 1,
        Family::Path(_) | Family::Cycle(_) => 2,
        Family::CompleteBipartite(a, b) if a > b => b.div_ceil(2) + 1,
        Family::CompleteBipartite(_, b) => b / 2 + 1,
    })
}

/// Outcome of [`certify`]; renders as `key: value` lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyReport {
    pub entries: Vec<(String, String)>,
    pub pass: bool,
}

impl fmt::Display for CertifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            writeln!(f, "{k}: {v}")?;
        }
        writeln!(f, "overall: {}", if self.pass { "pass" } else { "fail" })
    }
}

/// Checks a claimed value and witness against the verifier, the Δ-bound,
/// the P3 characterization and any closed form.
pub fn certify(g: &Graph, claimed_k: usize, witness: &VertexPartition) -> CertifyReport {
    let mut entries = Vec::new();
    let mut pass = true;
    let mut put = |key: &str, ok: Option<bool>, detail: String| {
        let status = match ok {
            Some(true) => "pass".to_string(),
            Some(false) => {
                pass = false;
                "fail".to_string()
            }
            None => "n/a".to_string(),
        };
        let value = if detail.is_empty() {
            status
        } else {
            format!("{status} ({detail})")
        };
        entries.push((key.to_string(), value));
    };

    match first_violation(g, witness, 2) {
        Ok(None) => put("witness", Some(true), String::new()),
        Ok(Some(v)) => put("witness", Some(false), v.to_string()),
        Err(e) => put("witness", Some(false), e.to_string()),
    }
    put(
        "witness_size",
        Some(witness.k() == claimed_k),
        format!("claimed {claimed_k}, witness has {}", witness.k()),
    );
    let bound = delta_upper_bound(g);
    put(
        "delta_bound",
        Some(claimed_k <= bound),
        format!("claimed {claimed_k} <= floor(Delta/2)+1 = {bound}"),
    );
    put(
        "p3",
        Some(claimed_k < 2 || has_p3(g)),
        format!("has_p3 = {}", has_p3(g)),
    );
    match closed_form(g) {
        Some(v) => put("closed_form", Some(v == claimed_k), format!("expected {v}")),
        None => put("closed_form", None, String::new()),
    }
    CertifyReport { entries, pass }
}
