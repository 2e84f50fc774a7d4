use std::collections::BTreeSet;

use crate::cone::hilbert_basis_with;
use crate::graph::{build_constraints, Labeling};
use crate::{Error, Limits, Result};

/// Splits `l` along pairwise disjoint edge sets covering its support. Factor
/// `i` agrees with `l` on `parts[i]` and is zero elsewhere.
pub fn factorize(l: &Labeling, parts: &[Vec<usize>]) -> Result<Vec<Labeling>> {
    let q = l.host().edge_count();
    let mut owner = vec![None; q];
    for (i, part) in parts.iter().enumerate() {
        for &e in part {
            if e >= q {
                return Err(Error::precondition(format!(
                    "edge index {e} is out of range"
                )));
            }
            if let Some(j) = owner[e] {
                return Err(Error::precondition(format!(
                    "parts {j} and {i} overlap at edge {e}"
                )));
            }
            owner[e] = Some(i);
        }
    }
    if let Some(e) = l.support().into_iter().find(|&e| owner[e].is_none()) {
        return Err(Error::precondition(format!(
            "support edge {e} is not covered by any part"
        )));
    }
    parts
        .iter()
        .map(|part| {
            let mut values = vec![0; q];
            for &e in part {
                values[e] = l.values()[e];
            }
            Labeling::new(l.host(), values)
        })
        .collect()
}

pub fn factorizations(l: &Labeling, sums: Option<&[u64]>) -> Result<Vec<Vec<Labeling>>> {
    factorizations_with(l, sums, &Limits::default())
}

/// Every factorization of `l` into nonzero magic factors, optionally with a
/// prescribed multiset of factor magic sums.
///
/// Each factor is `l` restricted to a block of a partition of its support.
/// The number of factors is at most the number of distinct supports in the
/// Hilbert basis, since each factor contains the support of some basis
/// element and the factors are disjoint. Factors are listed by their first
/// support edge.
pub fn factorizations_with(
    l: &Labeling,
    sums: Option<&[u64]>,
    limits: &Limits,
) -> Result<Vec<Vec<Labeling>>> {
    let host = l.host();
    let Some(total) = l.magic_sum() else {
        return Ok(Vec::new());
    };
    let supp = l.support();
    Limits::check("support size", supp.len() as u64, limits.max_edges as u64)?;
    if let Some(s) = sums {
        if s.iter().sum::<u64>() != total || s.contains(&0) {
            return Ok(Vec::new());
        }
    }
    let hb = hilbert_basis_with(&build_constraints(host)?, limits)?;
    let bound = hb
        .iter()
        .map(Labeling::support)
        .collect::<BTreeSet<_>>()
        .len();
    if let Some(s) = sums {
        if s.len() > bound {
            return Ok(Vec::new());
        }
    }

    let k = supp.len();
    let restrict = |mask: u32| -> Vec<u64> {
        let mut v = vec![0; host.edge_count()];
        for (bit, &e) in supp.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                v[e] = l.values()[e];
            }
        }
        v
    };
    // magic blocks, with their magic sums
    let blocks: Vec<(u32, u64)> = (1u32..(1u32 << k))
        .filter_map(|mask| {
            let s = host.magic_sum_of(&restrict(mask))?;
            let wanted = sums.is_none_or(|ss| ss.contains(&s));
            (s > 0 && wanted).then_some((mask, s))
        })
        .collect();

    let full = if k == 0 { 0 } else { (1u32 << k) - 1 };
    let mut remaining: Vec<u64> = sums.map(<[u64]>::to_vec).unwrap_or_default();
    remaining.sort_unstable();
    let mut chosen = Vec::new();
    let mut found = Vec::new();
    cover(
        full,
        &blocks,
        sums.is_some(),
        &mut remaining,
        bound,
        &mut chosen,
        &mut found,
    );
    if k == 0 {
        // the zero labeling has only the empty factorization
        found = if sums.is_none_or(<[u64]>::is_empty) {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    found
        .into_iter()
        .map(|masks| {
            masks
                .into_iter()
                .map(|m| Labeling::new(host, restrict(m)))
                .collect()
        })
        .collect()
}

fn cover(
    uncovered: u32,
    blocks: &[(u32, u64)],
    prescribed: bool,
    remaining: &mut Vec<u64>,
    bound: usize,
    chosen: &mut Vec<u32>,
    found: &mut Vec<Vec<u32>>,
) {
    if uncovered == 0 {
        if !prescribed || remaining.is_empty() {
            found.push(chosen.clone());
        }
        return;
    }
    if chosen.len() == bound {
        return;
    }
    let low = uncovered & uncovered.wrapping_neg();
    for &(mask, s) in blocks {
        if mask & low == 0 || mask & !uncovered != 0 {
            continue;
        }
        let slot = if prescribed {
            match remaining.iter().position(|&x| x == s) {
                Some(p) => Some(remaining.remove(p)),
                None => continue,
            }
        } else {
            None
        };
        chosen.push(mask);
        cover(
            uncovered & !mask,
            blocks,
            prescribed,
            remaining,
            bound,
            chosen,
            found,
        );
        chosen.pop();
        if let Some(x) = slot {
            let at = remaining.partition_point(|&y| y < x);
            remaining.insert(at, x);
        }
    }
}
