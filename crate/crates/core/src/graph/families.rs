//! Named host families. Vertices are named `1..n`, except for complete
//! bipartite graphs whose sides are `a1..am` and `b1..bn`.

use super::Host;
use crate::{Error, Result};

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn require_positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::precondition(format!(
            "{what} needs at least one vertex"
        )))
    } else {
        Ok(())
    }
}

/// Γ_n: every pair `i < j` plus a loop at every vertex, `n(n+1)/2` edges.
pub fn complete_general_graph(n: usize) -> Result<Host> {
    require_positive(n, "complete general graph")?;
    let edges: Vec<_> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    Host::graph(numbered(n), &edges)
}

/// Π_n: an arc `i -> j` for every ordered pair, loops included.
pub fn complete_digraph(n: usize) -> Result<Host> {
    require_positive(n, "complete digraph")?;
    let edges: Vec<_> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    Host::digraph(numbered(n), &edges)
}

/// K_n without loops.
pub fn complete_graph(n: usize) -> Result<Host> {
    require_positive(n, "complete graph")?;
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Host::graph(numbered(n), &edges)
}

/// K_{m,n}; edge `{a_i, b_j}` sits at canonical position `i * n + j`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Host> {
    require_positive(m, "complete bipartite graph")?;
    require_positive(n, "complete bipartite graph")?;
    let names: Vec<String> = (1..=m)
        .map(|i| format!("a{i}"))
        .chain((1..=n).map(|j| format!("b{j}")))
        .collect();
    let edges: Vec<_> = (0..m)
        .flat_map(|i| (0..n).map(move |j| (i, m + j)))
        .collect();
    Host::graph(names, &edges)
}

/// C_n for `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Host> {
    if n < 3 {
        return Err(Error::precondition("a cycle needs at least three vertices"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Host::graph(numbered(n), &edges)
}

/// The path `1 - 2 - ... - n`.
pub fn path_graph(n: usize) -> Result<Host> {
    require_positive(n, "path")?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Host::graph(numbered(n), &edges)
}

/// The directed cycle `1 -> 2 -> ... -> n -> 1`; `n = 1` is a single loop.
pub fn directed_cycle(n: usize) -> Result<Host> {
    require_positive(n, "directed cycle")?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Host::digraph(numbered(n), &edges)
}
