//! Graphs, digraphs and their labelings.
//!
//! A [`Host`] is either an undirected multigraph or a directed multigraph,
//! loops allowed. Edges are stored in a canonical order fixed at
//! construction, and every edge vector in the crate (labelings, supports,
//! constraint columns) is indexed in that order.

mod cayley;
mod constraints;
mod families;
pub mod io;
mod labeling;
mod transform;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::{Error, Result};

pub use cayley::{cayley_digraph, CayleyDigraph, GroupTable};
pub use constraints::{build_constraints, ConstraintSystem};
pub use families::{
    complete_bipartite, complete_digraph, complete_general_graph, complete_graph, cycle_graph,
    directed_cycle, path_graph,
};
pub use labeling::{magic_sum, Labeling};
pub use transform::{bipartite_to_digraph, digraph_to_bipartite, lift_labeling, BipartiteImage};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HostKind {
    Graph,
    Digraph,
}

impl fmt::Display for HostKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HostKind::Graph => f.write_str("graph"),
            HostKind::Digraph => f.write_str("digraph"),
        }
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct HostData {
    kind: HostKind,
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

/// An immutable graph or digraph. Cloning is cheap.
///
/// Undirected edges are stored as `(min, max)` vertex indices and sorted by
/// `(min, max, insertion index)`; directed edges are `(initial, terminal)`
/// sorted the same way.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Host(Arc<HostData>);

impl Host {
    pub fn new<S: Into<String>>(
        kind: HostKind,
        vertices: Vec<S>,
        edges: &[(usize, usize)],
    ) -> Result<Host> {
        Self::with_insertion_order(kind, vertices, edges).map(|(host, _)| host)
    }

    pub fn graph<S: Into<String>>(vertices: Vec<S>, edges: &[(usize, usize)]) -> Result<Host> {
        Self::new(HostKind::Graph, vertices, edges)
    }

    pub fn digraph<S: Into<String>>(vertices: Vec<S>, edges: &[(usize, usize)]) -> Result<Host> {
        Self::new(HostKind::Digraph, vertices, edges)
    }

    /// Builds a host and also returns, for each canonical edge position, the
    /// index of the input edge that landed there.
    pub fn with_insertion_order<S: Into<String>>(
        kind: HostKind,
        vertices: Vec<S>,
        edges: &[(usize, usize)],
    ) -> Result<(Host, Vec<usize>)> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let n = vertices.len();
        {
            let mut seen = std::collections::HashSet::new();
            for v in &vertices {
                if !seen.insert(v.as_str()) {
                    return Err(Error::malformed(format!("duplicate vertex `{v}`")));
                }
            }
        }
        let mut keyed = Vec::with_capacity(edges.len());
        for (pos, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::malformed(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            let e = match kind {
                HostKind::Graph => (u.min(v), u.max(v)),
                HostKind::Digraph => (u, v),
            };
            keyed.push((e, pos));
        }
        keyed.sort();
        let order = keyed.iter().map(|&(_, pos)| pos).collect();
        let edges = keyed.into_iter().map(|(e, _)| e).collect();
        Ok((
            Host(Arc::new(HostData {
                kind,
                vertices,
                edges,
            })),
            order,
        ))
    }

    pub fn kind(&self) -> HostKind {
        self.0.kind
    }

    pub fn is_directed(&self) -> bool {
        self.0.kind == HostKind::Digraph
    }

    pub fn vertex_count(&self) -> usize {
        self.0.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.0.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.0.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.0.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.0.edges[index]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.0.vertices.iter().position(|v| v == name)
    }

    /// `u-v` for graphs, `u->v` for digraphs, using vertex names.
    pub fn edge_name(&self, index: usize) -> String {
        let (u, v) = self.edge(index);
        let sep = if self.is_directed() { "->" } else { "-" };
        format!("{}{}{}", self.0.vertices[u], sep, self.0.vertices[v])
    }

    /// The spanning subhost keeping only the listed edges (all vertices stay).
    pub fn subhost(&self, edges: &[usize]) -> Host {
        let kept: Vec<(usize, usize)> = edges.iter().map(|&e| self.edge(e)).collect();
        Host::new(self.kind(), self.0.vertices.clone(), &kept)
            .expect("edges of a valid host stay valid")
    }

    /// Vertex sums of an edge vector: one entry per vertex for graphs, and
    /// for digraphs all out-sums followed by all in-sums. Loops count once.
    pub fn vertex_sums(&self, values: &[u64]) -> Vec<u64> {
        let n = self.vertex_count();
        match self.kind() {
            HostKind::Graph => {
                let mut sums = vec![0u64; n];
                for (&(u, v), &x) in self.edges().iter().zip(values) {
                    sums[u] += x;
                    if u != v {
                        sums[v] += x;
                    }
                }
                sums
            }
            HostKind::Digraph => {
                let mut sums = vec![0u64; 2 * n];
                for (&(u, v), &x) in self.edges().iter().zip(values) {
                    sums[u] += x;
                    sums[n + v] += x;
                }
                sums
            }
        }
    }

    /// The common vertex sum of `values`, if every vertex sum agrees.
    pub fn magic_sum_of(&self, values: &[u64]) -> Option<u64> {
        if values.len() != self.edge_count() {
            return None;
        }
        let sums = self.vertex_sums(values);
        match sums.split_first() {
            None => Some(0),
            Some((first, rest)) => rest.iter().all(|s| s == first).then_some(*first),
        }
    }

    /// The all-ones labeling is magic. For a digraph this means every vertex
    /// has the same in- and out-degree.
    pub fn is_eulerian(&self) -> bool {
        self.magic_sum_of(&vec![1; self.edge_count()]).is_some()
    }

    /// Every vertex has equal in- and out-degree (no requirement that the
    /// degree be the same across vertices). Undirected hosts are balanced
    /// trivially.
    pub fn is_balanced(&self) -> bool {
        if !self.is_directed() {
            return true;
        }
        let n = self.vertex_count();
        let sums = self.vertex_sums(&vec![1; self.edge_count()]);
        (0..n).all(|v| sums[v] == sums[n + v])
    }
}

/// Convenience wrapper over [`Host::is_eulerian`].
pub fn is_eulerian(d: &Host) -> bool {
    d.is_eulerian()
}
