use super::{hilbert_basis_with, HilbertBasis};
use crate::graph::{build_constraints, lift_labeling, Host, Labeling};
use crate::{Error, Limits, Result};

fn is_strict_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Basis elements with minimal support; these span the extreme rays.
///
/// Graph rays must have magic sum 1 or 2 and digraph rays magic sum 1; a
/// violation is reported as an internal consistency failure.
pub fn extreme_rays(hb: &HilbertBasis) -> Result<Vec<Labeling>> {
    let supports: Vec<Vec<usize>> = hb.iter().map(Labeling::support).collect();
    let rays: Vec<Labeling> = hb
        .iter()
        .zip(&supports)
        .filter(|(_, s)| !supports.iter().any(|t| is_strict_subset(t, s)))
        .map(|(l, _)| l.clone())
        .collect();
    let allowed: &[u64] = if hb.host().is_directed() {
        &[1]
    } else {
        &[1, 2]
    };
    for ray in &rays {
        let sum = ray.magic_sum().unwrap_or(0);
        if !allowed.contains(&sum) {
            return Err(Error::internal(format!(
                "extreme ray {:?} has magic sum {sum}",
                ray.values()
            )));
        }
    }
    Ok(rays)
}

/// Whether every edge is positive somewhere, and the edges that are not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positivity {
    pub positive: bool,
    /// Edges labeled 0 by every magic labeling, ascending.
    pub zero_edges: Vec<usize>,
}

pub fn is_positive(host: &Host) -> Result<Positivity> {
    is_positive_with(host, &Limits::default())
}

pub fn is_positive_with(host: &Host, limits: &Limits) -> Result<Positivity> {
    let hb = hilbert_basis_with(&build_constraints(host)?, limits)?;
    let mut covered = vec![false; host.edge_count()];
    for l in &hb {
        for e in l.support() {
            covered[e] = true;
        }
    }
    let zero_edges: Vec<usize> = (0..host.edge_count()).filter(|&e| !covered[e]).collect();
    Ok(Positivity {
        positive: zero_edges.is_empty(),
        zero_edges,
    })
}

/// A host with its always-zero edges deleted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivePart {
    pub host: Host,
    /// `kept[k]` is the original index of edge `k` of the reduced host.
    pub kept: Vec<usize>,
}

impl PositivePart {
    /// Re-embeds a labeling of the reduced host into the original host.
    pub fn restore(&self, l: &Labeling, original: &Host) -> Result<Labeling> {
        let mut values = vec![0; original.edge_count()];
        for (k, &x) in l.values().iter().enumerate() {
            values[self.kept[k]] = x;
        }
        Labeling::new(original, values)
    }
}

pub fn positive_part(host: &Host) -> Result<PositivePart> {
    positive_part_with(host, &Limits::default())
}

pub fn positive_part_with(host: &Host, limits: &Limits) -> Result<PositivePart> {
    let pos = is_positive_with(host, limits)?;
    let kept: Vec<usize> = (0..host.edge_count())
        .filter(|e| pos.zero_edges.binary_search(e).is_err())
        .collect();
    Ok(PositivePart {
        host: host.subhost(&kept),
        kept,
    })
}

pub fn verify_lift_property(sub: &Host, ambient: &Host) -> Result<bool> {
    verify_lift_property_with(sub, ambient, &Limits::default())
}

/// Every basis element of `sub`, extended by zeros, is a basis element of
/// `ambient`.
pub fn verify_lift_property_with(sub: &Host, ambient: &Host, limits: &Limits) -> Result<bool> {
    if sub.vertex_count() != ambient.vertex_count() || sub.kind() != ambient.kind() {
        return Err(Error::precondition(format!(
            "{} on {} vertices cannot be lifted into a {} on {} vertices",
            sub.kind(),
            sub.vertex_count(),
            ambient.kind(),
            ambient.vertex_count()
        )));
    }
    let small = hilbert_basis_with(&build_constraints(sub)?, limits)?;
    let big = hilbert_basis_with(&build_constraints(ambient)?, limits)?;
    for l in &small {
        let lifted = lift_labeling(l, ambient)?;
        if !big.contains(lifted.values()) {
            return Ok(false);
        }
    }
    Ok(true)
}
