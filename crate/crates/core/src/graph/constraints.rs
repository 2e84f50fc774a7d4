use super::{Host, HostKind};
use crate::{linalg, Error, Result};

/// Homogeneous integer system whose nonnegative kernel is the set of magic
/// labelings of its host. One column per edge.
///
/// Graph rows are `sum_i - sum_1` for `i = 2..n`. Digraph rows are
/// `out_i - out_1` for `i = 2..n` followed by `in_i - out_1` for `i = 1..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    host: Host,
    matrix: Vec<Vec<i64>>,
}

pub fn build_constraints(host: &Host) -> Result<ConstraintSystem> {
    let n = host.vertex_count();
    if n == 0 {
        return Err(Error::malformed("host has no vertices"));
    }
    let q = host.edge_count();
    // incidence[k] = row vector of the k-th vertex sum (out-sums then in-sums
    // for digraphs)
    let sums = match host.kind() {
        HostKind::Graph => n,
        HostKind::Digraph => 2 * n,
    };
    let mut incidence = vec![vec![0i64; q]; sums];
    for (e, &(u, v)) in host.edges().iter().enumerate() {
        match host.kind() {
            HostKind::Graph => {
                incidence[u][e] = 1;
                incidence[v][e] = 1;
            }
            HostKind::Digraph => {
                incidence[u][e] = 1;
                incidence[n + v][e] = 1;
            }
        }
    }
    let matrix = incidence[1..]
        .iter()
        .map(|row| row.iter().zip(&incidence[0]).map(|(a, b)| a - b).collect())
        .collect();
    Ok(ConstraintSystem {
        host: host.clone(),
        matrix,
    })
}

impl ConstraintSystem {
    pub fn host(&self) -> &Host {
        &self.host
    }

    pub fn kind(&self) -> HostKind {
        self.host.kind()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn row_count(&self) -> usize {
        self.matrix.len()
    }

    pub fn column_count(&self) -> usize {
        self.host.edge_count()
    }

    /// `matrix * x`.
    pub fn defect(&self, x: &[u64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(x).map(|(&a, &b)| a * b as i64).sum())
            .collect()
    }

    pub fn is_satisfied(&self, x: &[u64]) -> bool {
        self.defect(x).iter().all(|&d| d == 0)
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }

    /// Rank of the columns in `support`.
    pub fn support_rank(&self, support: &[usize]) -> usize {
        linalg::column_rank(&self.matrix, support)
    }
}
