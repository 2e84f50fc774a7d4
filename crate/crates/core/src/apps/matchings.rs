use crate::cone::hilbert_basis_with;
use crate::ehrhart::{count_magic_with, enumerate_magic_with};
use crate::graph::{build_constraints, Host, Labeling};
use crate::{Error, Limits, Result};

pub fn perfect_matchings(g: &Host) -> Result<Vec<Labeling>> {
    perfect_matchings_with(g, &Limits::default())
}

/// The basis elements of magic sum 1. Their number is checked against the
/// independent count `H(1)`.
pub fn perfect_matchings_with(g: &Host, limits: &Limits) -> Result<Vec<Labeling>> {
    let hb = hilbert_basis_with(&build_constraints(g)?, limits)?;
    let matchings: Vec<Labeling> = hb
        .iter()
        .filter(|l| l.magic_sum() == Some(1))
        .cloned()
        .collect();
    let h1 = count_magic_with(g, 1, limits)?;
    if h1 != matchings.len().into() {
        return Err(Error::internal(format!(
            "{} sum-one basis elements but H(1) = {h1}",
            matchings.len()
        )));
    }
    Ok(matchings)
}

pub fn n_matchings(g: &Host, n: u64) -> Result<Vec<Labeling>> {
    n_matchings_with(g, n, &Limits::default())
}

/// Magic labelings of magic sum at most `n` with labels in `0..=n`, ordered
/// by magic sum and then lexicographically.
pub fn n_matchings_with(g: &Host, n: u64, limits: &Limits) -> Result<Vec<Labeling>> {
    let mut out = Vec::new();
    for r in 0..=n {
        out.extend(
            enumerate_magic_with(g, r, limits)?
                .into_iter()
                .filter(|l| l.values().iter().all(|&x| x <= n)),
        );
        if out.len() > limits.max_enumerated {
            return Err(Error::Resource {
                what: "enumerated labelings",
                actual: out.len() as u64,
                cap: limits.max_enumerated as u64,
            });
        }
    }
    Ok(out)
}
