use crate::cone::is_positive_with;
use crate::ehrhart::{bipartite_component_count, expected_degree, fit_quasipolynomial_with};
use crate::graph::{Host, HostKind};
use crate::{Error, Limits, Result};

/// Positivity and degree diagnostics for one host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostics {
    pub kind: HostKind,
    pub vertices: usize,
    pub edges: usize,
    /// Bipartite components, counted on G_D for digraphs.
    pub bipartite_components: usize,
    /// All-ones labeling is magic.
    pub eulerian: bool,
    /// In-degree equals out-degree everywhere; always true for graphs.
    pub balanced: bool,
    pub positive: bool,
    /// Edges that are zero in every magic labeling.
    pub zero_edges: Vec<usize>,
    /// Degree formula on the host itself.
    pub formula_degree: i64,
    /// Degree formula on the positive part; `None` if that part is edgeless.
    pub expected_degree: Option<i64>,
    /// Degree of the fitted quasi-polynomial, `None` in the delta case or
    /// when the fit is over the resource caps.
    pub fitted_degree: Option<i64>,
}

impl Diagnostics {
    /// The fitted degree, when there is one, matches the formula.
    pub fn degree_agrees(&self) -> bool {
        self.fitted_degree.is_none() || self.fitted_degree == self.expected_degree
    }
}

pub fn diagnose(host: &Host) -> Result<Diagnostics> {
    diagnose_with(host, &Limits::default())
}

pub fn diagnose_with(host: &Host, limits: &Limits) -> Result<Diagnostics> {
    let positivity = is_positive_with(host, limits)?;
    let (expected, fitted) = match fit_quasipolynomial_with(host, limits) {
        Ok(fit) => (fit.expected_degree, fit.degree()),
        Err(Error::Resource { .. }) => {
            let kept = host.edge_count() - positivity.zero_edges.len();
            let part: Vec<usize> = (0..host.edge_count())
                .filter(|e| positivity.zero_edges.binary_search(e).is_err())
                .collect();
            let d = (kept > 0).then(|| expected_degree(&host.subhost(&part)));
            (d, None)
        }
        Err(e) => return Err(e),
    };
    Ok(Diagnostics {
        kind: host.kind(),
        vertices: host.vertex_count(),
        edges: host.edge_count(),
        bipartite_components: bipartite_component_count(host),
        eulerian: host.is_eulerian(),
        balanced: !host.is_directed() || host.is_balanced(),
        positive: positivity.positive,
        zero_edges: positivity.zero_edges,
        formula_degree: expected_degree(host),
        expected_degree: expected,
        fitted_degree: fitted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_digraph, complete_graph, path_graph};

    #[test]
    fn positive_hosts() {
        let d = diagnose(&complete_graph(4).unwrap()).unwrap();
        assert!(d.positive && d.eulerian && d.degree_agrees());
        assert_eq!(d.fitted_degree, Some(2));
        let pi = diagnose(&complete_digraph(3).unwrap()).unwrap();
        assert!(pi.eulerian);
        assert_eq!(pi.fitted_degree, Some(4));
    }

    #[test]
    fn path_is_not_positive() {
        let d = diagnose(&path_graph(3).unwrap()).unwrap();
        assert!(!d.positive);
        assert_eq!(d.zero_edges, vec![0, 1]);
        assert_eq!(d.expected_degree, None);
        assert!(d.degree_agrees());
    }
}
