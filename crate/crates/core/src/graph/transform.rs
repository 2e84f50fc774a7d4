use super::{Host, HostKind, Labeling};
use crate::{Error, Result};

/// The bipartite graph G_D of a digraph D together with the edge bijection.
///
/// Vertex `a_i` sits at index `i` and `b_j` at index `n + j`; the arc
/// `v_i -> v_j` becomes the edge `{a_i, b_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteImage {
    pub digraph: Host,
    pub graph: Host,
    /// `edge_map[k]` is the G_D edge index for digraph edge `k`.
    pub edge_map: Vec<usize>,
}

pub fn digraph_to_bipartite(d: &Host) -> Result<BipartiteImage> {
    if !d.is_directed() {
        return Err(Error::precondition(
            "digraph_to_bipartite expects a digraph",
        ));
    }
    let n = d.vertex_count();
    let names: Vec<String> = d
        .vertices()
        .iter()
        .map(|v| format!("a{v}"))
        .chain(d.vertices().iter().map(|v| format!("b{v}")))
        .collect();
    let edges: Vec<(usize, usize)> = d.edges().iter().map(|&(i, j)| (i, n + j)).collect();
    let (graph, order) = Host::with_insertion_order(HostKind::Graph, names, &edges)?;
    let mut edge_map = vec![0; order.len()];
    for (pos, &orig) in order.iter().enumerate() {
        edge_map[orig] = pos;
    }
    Ok(BipartiteImage {
        digraph: d.clone(),
        graph,
        edge_map,
    })
}

impl BipartiteImage {
    /// Transports a labeling of D onto G_D.
    pub fn forward(&self, l: &Labeling) -> Result<Labeling> {
        if l.host() != &self.digraph {
            return Err(Error::structural("labeling does not live on this digraph"));
        }
        let mut values = vec![0; self.graph.edge_count()];
        for (k, &x) in l.values().iter().enumerate() {
            values[self.edge_map[k]] = x;
        }
        Labeling::new(&self.graph, values)
    }

    /// Transports a labeling of G_D back onto D.
    pub fn backward(&self, l: &Labeling) -> Result<Labeling> {
        if l.host() != &self.graph {
            return Err(Error::structural(
                "labeling does not live on this bipartite image",
            ));
        }
        let values = self.edge_map.iter().map(|&k| l.values()[k]).collect();
        Labeling::new(&self.digraph, values)
    }
}

/// Reads a graph laid out like a bipartite image (first half of the vertices
/// on side a, second half on side b, every edge crossing) back as a digraph.
/// Names `a{v}` / `b{v}` give digraph vertex `v`; otherwise vertices are
/// numbered from 1.
pub fn bipartite_to_digraph(g: &Host) -> Result<BipartiteImage> {
    if g.is_directed() || !g.vertex_count().is_multiple_of(2) {
        return Err(Error::precondition(
            "expected an undirected graph with an even number of vertices",
        ));
    }
    let n = g.vertex_count() / 2;
    let names = g.vertices();
    let stripped: Option<Vec<String>> = (0..n)
        .map(|i| {
            let a = names[i].strip_prefix('a')?;
            (names[n + i].strip_prefix('b')? == a).then(|| a.to_string())
        })
        .collect();
    let vertices = stripped.unwrap_or_else(|| (1..=n).map(|i| i.to_string()).collect());
    let mut arcs = Vec::with_capacity(g.edge_count());
    for &(u, v) in g.edges() {
        if u >= n || v < n {
            return Err(Error::structural(format!(
                "edge {}-{} does not cross the two halves",
                names[u], names[v]
            )));
        }
        arcs.push((u, v - n));
    }
    let d = Host::digraph(vertices, &arcs)?;
    let mut image = digraph_to_bipartite(&d)?;
    debug_assert_eq!(image.graph.edges(), g.edges());
    image.graph = g.clone();
    Ok(image)
}

/// For each edge of `sub`, the matching edge of `target` (by endpoint
/// indices; parallel edges are paired off in canonical order).
pub(crate) fn embed_edges(sub: &Host, target: &Host) -> Result<Vec<usize>> {
    if sub.kind() != target.kind() {
        return Err(Error::structural(format!(
            "cannot embed a {} into a {}",
            sub.kind(),
            target.kind()
        )));
    }
    if sub.vertex_count() != target.vertex_count() {
        return Err(Error::structural(format!(
            "vertex counts differ ({} vs {})",
            sub.vertex_count(),
            target.vertex_count()
        )));
    }
    let mut used = vec![false; target.edge_count()];
    sub.edges()
        .iter()
        .map(|&e| {
            let slot = target
                .edges()
                .iter()
                .enumerate()
                .position(|(k, &t)| t == e && !used[k])
                .ok_or_else(|| {
                    Error::structural(format!("edge {e:?} has no counterpart in the target"))
                })?;
            used[slot] = true;
            Ok(slot)
        })
        .collect()
}

/// Extends a labeling of a spanning subgraph by zeros.
pub fn lift_labeling(l: &Labeling, target: &Host) -> Result<Labeling> {
    let slots = embed_edges(l.host(), target)?;
    let mut values = vec![0; target.edge_count()];
    for (&slot, &x) in slots.iter().zip(l.values()) {
        values[slot] = x;
    }
    Labeling::new(target, values)
}
