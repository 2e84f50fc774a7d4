use rustc_hash::FxHashMap as HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::graph::{digraph_to_bipartite, Host, HostKind, Labeling};
use crate::{Limits, Result};

/// The vertex-sum slots touched by each edge: one per endpoint for graphs
/// (a loop touches one slot), out-slot `u` and in-slot `n + v` for digraphs.
struct Slots {
    per_edge: Vec<(usize, Option<usize>)>,
    count: usize,
    /// Last edge touching each slot, `None` for slots no edge touches.
    closes_at: Vec<Option<usize>>,
}

impl Slots {
    fn new(host: &Host) -> Slots {
        let n = host.vertex_count();
        let count = match host.kind() {
            HostKind::Graph => n,
            HostKind::Digraph => 2 * n,
        };
        let per_edge: Vec<(usize, Option<usize>)> = host
            .edges()
            .iter()
            .map(|&(u, v)| match host.kind() {
                HostKind::Graph if u == v => (u, None),
                HostKind::Graph => (u, Some(v)),
                HostKind::Digraph => (u, Some(n + v)),
            })
            .collect();
        let mut closes_at = vec![None; count];
        for (e, &(a, b)) in per_edge.iter().enumerate() {
            closes_at[a] = Some(e);
            if let Some(b) = b {
                closes_at[b] = Some(e);
            }
        }
        Slots {
            per_edge,
            count,
            closes_at,
        }
    }

    /// A slot with no incident edge has sum 0, so only `r = 0` survives.
    fn has_bare_slot(&self) -> bool {
        self.closes_at.iter().any(Option::is_none)
    }

    fn slots(&self, e: usize) -> impl Iterator<Item = usize> {
        let (a, b) = self.per_edge[e];
        std::iter::once(a).chain(b)
    }
}

fn check_volume(host: &Host, r: u64, limits: &Limits) -> Result<()> {
    Limits::check(
        "search volume q*r",
        host.edge_count() as u64 * r,
        limits.max_search_volume,
    )
}

pub fn count_magic(host: &Host, r: u64) -> Result<BigUint> {
    count_magic_with(host, r, &Limits::default())
}

/// Number of magic labelings of magic sum `r`.
///
/// Edges are assigned in canonical order with values in `0..=r`. A branch
/// dies as soon as a partial vertex sum exceeds `r` or a vertex whose last
/// edge has been assigned falls short of `r`. Branches reaching the same
/// partial sums are merged, so the work is bounded by the number of distinct
/// frontier states rather than the number of labelings.
pub fn count_magic_with(host: &Host, r: u64, limits: &Limits) -> Result<BigUint> {
    check_volume(host, r, limits)?;
    let slots = Slots::new(host);
    if slots.count == 0 {
        return Ok(BigUint::one());
    }
    if slots.has_bare_slot() {
        return Ok(if r == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        });
    }
    let bits = (64 - r.leading_zeros()).max(1) as usize;
    if slots.count * bits <= 128 {
        if let Some(total) = count_packed(host, &slots, r, bits) {
            return Ok(BigUint::from(total));
        }
    }
    Ok(count_wide(host, &slots, r))
}

/// The forced value of edge `e` (or its admissible range) given the partial
/// sums before it.
fn edge_range(
    touched: &[usize],
    closing: &[usize],
    get: impl Fn(usize) -> u64,
    r: u64,
) -> Option<(u64, u64)> {
    let room = touched.iter().map(|&s| r - get(s)).min().unwrap_or(0);
    match closing.first() {
        Some(&s) => {
            let need = r - get(s);
            (need <= room && closing.iter().all(|&t| r - get(t) == need)).then_some((need, need))
        }
        None => Some((0, room)),
    }
}

fn touched_and_closing(slots: &Slots, e: usize) -> (Vec<usize>, Vec<usize>) {
    let touched: Vec<usize> = slots.slots(e).collect();
    let closing = touched
        .iter()
        .copied()
        .filter(|&s| slots.closes_at[s] == Some(e))
        .collect();
    (touched, closing)
}

/// Frontier states packed `bits` per slot into a `u128`, counts in `u128`.
/// `None` on overflow.
fn count_packed(host: &Host, slots: &Slots, r: u64, bits: usize) -> Option<u128> {
    let mask = (1u128 << bits) - 1;
    let mut states: HashMap<u128, u128> = HashMap::default();
    states.insert(0, 1);
    for e in 0..host.edge_count() {
        let (touched, closing) = touched_and_closing(slots, e);
        let step: u128 = touched.iter().map(|&s| 1u128 << (s * bits)).sum();
        let mut next: HashMap<u128, u128> =
            HashMap::with_capacity_and_hasher(states.len(), Default::default());
        for (key, ways) in states {
            let get = |s: usize| ((key >> (s * bits)) & mask) as u64;
            let Some((lo, hi)) = edge_range(&touched, &closing, get, r) else {
                continue;
            };
            for x in lo..=hi {
                let slot = next.entry(key + step * x as u128).or_default();
                *slot = slot.checked_add(ways)?;
            }
        }
        states = next;
    }
    states
        .into_values()
        .try_fold(0u128, |a, b| a.checked_add(b))
}

fn count_wide(host: &Host, slots: &Slots, r: u64) -> BigUint {
    let mut states: HashMap<Vec<u64>, BigUint> = HashMap::default();
    states.insert(vec![0; slots.count], BigUint::one());
    for e in 0..host.edge_count() {
        let (touched, closing) = touched_and_closing(slots, e);
        let mut next: HashMap<Vec<u64>, BigUint> =
            HashMap::with_capacity_and_hasher(states.len(), Default::default());
        for (sums, ways) in states {
            let Some((lo, hi)) = edge_range(&touched, &closing, |s| sums[s], r) else {
                continue;
            };
            for x in lo..=hi {
                let mut s2 = sums.clone();
                for &s in &touched {
                    s2[s] += x;
                }
                *next.entry(s2).or_default() += &ways;
            }
        }
        states = next;
    }
    states.into_values().sum()
}

pub fn enumerate_magic(host: &Host, r: u64) -> Result<Vec<Labeling>> {
    enumerate_magic_with(host, r, &Limits::default())
}

/// All magic labelings of magic sum `r`, in lexicographic order.
pub fn enumerate_magic_with(host: &Host, r: u64, limits: &Limits) -> Result<Vec<Labeling>> {
    check_volume(host, r, limits)?;
    let slots = Slots::new(host);
    if slots.count > 0 && slots.has_bare_slot() && r > 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut values = vec![0; host.edge_count()];
    let mut sums = vec![0; slots.count];
    let mut overflow = false;
    enumerate(
        0,
        r,
        &slots,
        &mut values,
        &mut sums,
        &mut out,
        limits.max_enumerated,
        &mut overflow,
    );
    if overflow {
        return Err(crate::Error::Resource {
            what: "enumerated labelings",
            actual: limits.max_enumerated as u64 + 1,
            cap: limits.max_enumerated as u64,
        });
    }
    out.into_iter().map(|v| Labeling::new(host, v)).collect()
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    e: usize,
    r: u64,
    slots: &Slots,
    values: &mut Vec<u64>,
    sums: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    cap: usize,
    overflow: &mut bool,
) {
    if *overflow {
        return;
    }
    if e == values.len() {
        if out.len() == cap {
            *overflow = true;
        } else {
            out.push(values.clone());
        }
        return;
    }
    let touched: Vec<usize> = slots.slots(e).collect();
    let room = touched.iter().map(|&s| r - sums[s]).min().unwrap_or(0);
    for x in 0..=room {
        for &s in &touched {
            sums[s] += x;
        }
        let ok = touched
            .iter()
            .all(|&s| slots.closes_at[s] != Some(e) || sums[s] == r);
        if ok {
            values[e] = x;
            enumerate(e + 1, r, slots, values, sums, out, cap, overflow);
        }
        for &s in &touched {
            sums[s] -= x;
        }
    }
    values[e] = 0;
}

/// Number of connected components admitting a proper 2-coloring. Isolated
/// vertices count; a loop makes its component non-bipartite. For a digraph
/// the count is taken on its bipartite image G_D.
pub fn bipartite_component_count(host: &Host) -> usize {
    if host.is_directed() {
        let img = digraph_to_bipartite(host).expect("host is a digraph");
        return bipartite_component_count(&img.graph);
    }
    let n = host.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in host.edges() {
        adj[u].push(v);
        if u != v {
            adj[v].push(u);
        }
    }
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut count = 0;
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut stack = vec![start];
        let mut bipartite = true;
        while let Some(u) = stack.pop() {
            let cu = color[u].unwrap();
            for &w in &adj[u] {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        stack.push(w);
                    }
                    Some(cw) if cw == cu => bipartite = false,
                    Some(_) => {}
                }
            }
        }
        if bipartite {
            count += 1;
        }
    }
    count
}

/// `q - n + b` for graphs, `q - 2n + b` (b measured on G_D) for digraphs.
pub fn expected_degree(host: &Host) -> i64 {
    let q = host.edge_count() as i64;
    let n = host.vertex_count() as i64;
    let b = bipartite_component_count(host) as i64;
    match host.kind() {
        HostKind::Graph => q - n + b,
        HostKind::Digraph => q - 2 * n + b,
    }
}
