use std::collections::HashSet;

use super::HilbertBasis;
use crate::graph::Labeling;
use crate::{Error, Result};

/// Writes a magic labeling as a nonnegative integer combination of basis
/// elements. Returns `(element index, multiplicity)` pairs in basis order.
///
/// Depth-first search: element `i` is subtracted while it fits, and later
/// elements cover the rest; failed remainders are memoized.
pub fn decompose(l: &Labeling, hb: &HilbertBasis) -> Result<Vec<(usize, u64)>> {
    if l.host() != hb.host() {
        return Err(Error::structural(
            "labeling and basis live on different hosts",
        ));
    }
    if !l.is_magic() {
        return Err(Error::precondition("only magic labelings decompose"));
    }
    let elements: Vec<&[u64]> = hb.iter().map(Labeling::values).collect();
    let mut failed = HashSet::new();
    let mut picks = Vec::new();
    if search(l.values().to_vec(), 0, &elements, &mut failed, &mut picks) {
        let mut out: Vec<(usize, u64)> = Vec::new();
        for i in picks {
            match out.last_mut() {
                Some((j, m)) if *j == i => *m += 1,
                _ => out.push((i, 1)),
            }
        }
        Ok(out)
    } else {
        Err(Error::internal(format!(
            "magic labeling {:?} does not decompose over the basis",
            l.values()
        )))
    }
}

fn search(
    rest: Vec<u64>,
    from: usize,
    elements: &[&[u64]],
    failed: &mut HashSet<(Vec<u64>, usize)>,
    picks: &mut Vec<usize>,
) -> bool {
    if rest.iter().all(|&x| x == 0) {
        return true;
    }
    if failed.contains(&(rest.clone(), from)) {
        return false;
    }
    for (i, e) in elements.iter().enumerate().skip(from) {
        if e.iter().zip(&rest).all(|(a, b)| a <= b) {
            let next: Vec<u64> = rest.iter().zip(e.iter()).map(|(b, a)| b - a).collect();
            picks.push(i);
            if search(next, i, elements, failed, picks) {
                return true;
            }
            picks.pop();
        }
    }
    failed.insert((rest, from));
    false
}
