use std::fmt;

use crate::graph::{
    complete_bipartite, complete_digraph, complete_general_graph, Host, HostKind, Labeling,
};
use crate::{Error, Result};

/// A square matrix of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    entries: Vec<Vec<u64>>,
}

impl SquareMatrix {
    pub fn new(entries: Vec<Vec<u64>>) -> Result<SquareMatrix> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::malformed("matrix has no rows"));
        }
        if let Some(i) = entries.iter().position(|row| row.len() != n) {
            return Err(Error::malformed(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                entries[i].len()
            )));
        }
        Ok(SquareMatrix { entries })
    }

    /// Whitespace-separated rows, one per line. Blank and `#` lines are skipped.
    pub fn parse(text: &str) -> Result<SquareMatrix> {
        SquareMatrix::new(crate::graph::io::parse_integer_rows(text)?)
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i][j]
    }

    /// The common row and column sum, if there is one.
    pub fn is_semi_magic(&self) -> Option<u64> {
        let s: u64 = self.entries[0].iter().sum();
        let n = self.order();
        let rows = self.entries.iter().all(|r| r.iter().sum::<u64>() == s);
        let cols = (0..n).all(|j| self.entries.iter().map(|r| r[j]).sum::<u64>() == s);
        (rows && cols).then_some(s)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(u64::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Which host a semi-magic square is read on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SemiMagicHost {
    /// The complete digraph with loops; entry `(i, j)` labels the arc `i -> j`.
    #[default]
    Digraph,
    /// `K_{n,n}`; entry `(i, j)` labels the edge `a_i b_j`.
    Bipartite,
}

fn same_shape(h: &Host, standard: &Host) -> bool {
    h.kind() == standard.kind()
        && h.vertex_count() == standard.vertex_count()
        && h.edges() == standard.edges()
}

/// Reads a labeling of the complete digraph with loops, or of `K_{n,n}`, as
/// a square matrix. The result is semi-magic exactly when `l` is magic.
pub fn labeling_to_semimagic(l: &Labeling) -> Result<SquareMatrix> {
    let h = l.host();
    let n = match h.kind() {
        HostKind::Digraph => h.vertex_count(),
        HostKind::Graph => h.vertex_count() / 2,
    };
    let standard = match (n, h.kind()) {
        (0, _) => None,
        (n, HostKind::Digraph) => Some(complete_digraph(n)?),
        (n, HostKind::Graph) => Some(complete_bipartite(n, n)?),
    };
    if !standard.is_some_and(|s| same_shape(h, &s)) {
        return Err(Error::structural(
            "host is neither a complete digraph with loops nor a balanced complete bipartite graph",
        ));
    }
    // both standard hosts list edges in row-major order
    let entries = l.values().chunks(n).map(<[u64]>::to_vec).collect();
    SquareMatrix::new(entries)
}

pub fn semimagic_to_labeling(m: &SquareMatrix, target: SemiMagicHost) -> Result<Labeling> {
    let n = m.order();
    let host = match target {
        SemiMagicHost::Digraph => complete_digraph(n)?,
        SemiMagicHost::Bipartite => complete_bipartite(n, n)?,
    };
    Labeling::new(&host, m.entries.concat())
}

/// Reads a labeling of the complete graph with loops as a symmetric matrix.
/// A loop label sits on the diagonal, so the result is semi-magic exactly
/// when `l` is magic.
pub fn labeling_to_symmetric(l: &Labeling) -> Result<SquareMatrix> {
    let h = l.host();
    let n = h.vertex_count();
    if n == 0 || !same_shape(h, &complete_general_graph(n)?) {
        return Err(Error::structural("host is not a complete graph with loops"));
    }
    let mut entries = vec![vec![0; n]; n];
    for (e, &(u, v)) in h.edges().iter().enumerate() {
        entries[u][v] = l.values()[e];
        entries[v][u] = l.values()[e];
    }
    SquareMatrix::new(entries)
}

pub fn symmetric_to_labeling(m: &SquareMatrix) -> Result<Labeling> {
    if !m.is_symmetric() {
        return Err(Error::precondition("matrix is not symmetric"));
    }
    let host = complete_general_graph(m.order())?;
    let values = host.edges().iter().map(|&(u, v)| m.get(u, v)).collect();
    Labeling::new(&host, values)
}
