//! Canonical forms of small multigraphs and multidigraphs with loops.
//!
//! Color refinement followed by individualization over the first
//! non-singleton cell; the form is the lexicographically smallest relabeled
//! adjacency matrix over all leaves of the search tree.

use crate::graph::{Host, HostKind};

/// An isomorphism-invariant encoding: two edge subsets get equal forms iff
/// their subgraphs (isolated vertices dropped) are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    kind: HostKind,
    order: usize,
    /// Row-major multiplicity matrix in canonical vertex order.
    matrix: Vec<u32>,
}

impl CanonicalForm {
    /// Number of non-isolated vertices.
    pub fn order(&self) -> usize {
        self.order
    }
}

struct Multigraph {
    kind: HostKind,
    adj: Vec<Vec<u32>>,
}

impl Multigraph {
    fn from_edges(host: &Host, edges: &[usize]) -> Multigraph {
        let mut index = vec![usize::MAX; host.vertex_count()];
        let mut m = 0;
        for &e in edges {
            let (u, v) = host.edge(e);
            for w in [u, v] {
                if index[w] == usize::MAX {
                    index[w] = m;
                    m += 1;
                }
            }
        }
        let mut adj = vec![vec![0u32; m]; m];
        for &e in edges {
            let (u, v) = host.edge(e);
            let (a, b) = (index[u], index[v]);
            adj[a][b] += 1;
            if host.kind() == HostKind::Graph && a != b {
                adj[b][a] += 1;
            }
        }
        Multigraph {
            kind: host.kind(),
            adj,
        }
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    /// Replaces `colors` by ranks of the signatures until no cell splits.
    fn refine(&self, colors: &mut Vec<usize>) {
        let m = self.len();
        loop {
            let cells_before = distinct(colors);
            let signatures: Vec<Signature> = (0..m)
                .map(|v| {
                    let mut nb: Vec<(usize, u32, u32)> = (0..m)
                        .filter(|&w| self.adj[v][w] > 0 || self.adj[w][v] > 0)
                        .map(|w| (colors[w], self.adj[v][w], self.adj[w][v]))
                        .collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            *colors = ranks(&signatures);
            if distinct(colors) == cells_before {
                return;
            }
        }
    }

    fn encode(&self, colors: &[usize]) -> Vec<u32> {
        let m = self.len();
        let mut out = vec![0; m * m];
        for u in 0..m {
            for v in 0..m {
                out[colors[u] * m + colors[v]] = self.adj[u][v];
            }
        }
        out
    }

    fn search(&self, mut colors: Vec<usize>, best: &mut Option<Vec<u32>>) {
        self.refine(&mut colors);
        let m = self.len();
        if distinct(&colors) == m {
            let code = self.encode(&colors);
            if best.as_ref().is_none_or(|b| code < *b) {
                *best = Some(code);
            }
            return;
        }
        // first (smallest color) non-singleton cell
        let mut size = vec![0usize; m];
        for &c in &colors {
            size[c] += 1;
        }
        let target = (0..m).find(|&c| size[c] > 1).expect("not discrete");
        for v in (0..m).filter(|&v| colors[v] == target) {
            let split: Vec<(usize, usize)> = (0..m)
                .map(|w| (colors[w], usize::from(w != v && colors[w] == target)))
                .collect();
            self.search(ranks(&split), best);
        }
    }
}

type Signature = (usize, Vec<(usize, u32, u32)>);

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn ranks<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key is present"))
        .collect()
}

/// Canonical form of the subgraph of `host` made of `edges`.
pub fn canonical_form(host: &Host, edges: &[usize]) -> CanonicalForm {
    let g = Multigraph::from_edges(host, edges);
    let m = g.len();
    let initial: Vec<(u32, u32, u32)> = (0..m)
        .map(|v| {
            let out: u32 = g.adj[v].iter().sum();
            let inn: u32 = g.adj.iter().map(|row| row[v]).sum();
            (g.adj[v][v], out, inn)
        })
        .collect();
    let mut best = None;
    if m > 0 {
        g.search(ranks(&initial), &mut best);
    }
    CanonicalForm {
        kind: g.kind,
        order: m,
        matrix: best.unwrap_or_default(),
    }
}

/// Whether two edge subsets span isomorphic subgraphs.
pub fn are_isomorphic(a: &Host, a_edges: &[usize], b: &Host, b_edges: &[usize]) -> bool {
    canonical_form(a, a_edges) == canonical_form(b, b_edges)
}
