#![allow(dead_code)]

use magiclat::graph::{
    complete_bipartite, complete_digraph, complete_general_graph, complete_graph, cycle_graph,
    directed_cycle,
};
use magiclat::{Host, HostKind};

/// Every vector in `[0, r]^q` whose vertex sums all equal `r`, by direct
/// search with a partial-sum cutoff.
pub fn brute_magic(host: &Host, r: u64) -> Vec<Vec<u64>> {
    let q = host.edge_count();
    let width = match host.kind() {
        HostKind::Graph => host.vertex_count(),
        HostKind::Digraph => 2 * host.vertex_count(),
    };
    let mut out = Vec::new();
    let mut x = vec![0; q];
    let mut sums = vec![0; width];
    go(host, r, 0, &mut x, &mut sums, &mut out);
    out
}

fn touched(host: &Host, e: usize) -> Vec<usize> {
    let (u, v) = host.edge(e);
    match host.kind() {
        HostKind::Graph if u == v => vec![u],
        HostKind::Graph => vec![u, v],
        HostKind::Digraph => vec![u, host.vertex_count() + v],
    }
}

fn go(
    host: &Host,
    r: u64,
    e: usize,
    x: &mut Vec<u64>,
    sums: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if e == x.len() {
        if sums.iter().all(|&s| s == r) {
            out.push(x.clone());
        }
        return;
    }
    let t = touched(host, e);
    for k in 0..=r {
        if t.iter().any(|&s| sums[s] + k > r) {
            break;
        }
        x[e] = k;
        for &s in &t {
            sums[s] += k;
        }
        go(host, r, e + 1, x, sums, out);
        for &s in &t {
            sums[s] -= k;
        }
    }
    x[e] = 0;
}

/// Magic labelings of sum `1..=max_sum` that are not the sum of two nonzero
/// magic labelings.
pub fn brute_irreducibles(host: &Host, max_sum: u64) -> Vec<Vec<u64>> {
    let by_sum: Vec<Vec<Vec<u64>>> = (0..=max_sum).map(|r| brute_magic(host, r)).collect();
    let mut out = Vec::new();
    for r in 1..=max_sum {
        for x in &by_sum[r as usize] {
            let reducible = (1..r).any(|s| {
                by_sum[s as usize]
                    .iter()
                    .any(|y| y.iter().zip(x).all(|(a, b)| a <= b))
            });
            if !reducible {
                out.push(x.clone());
            }
        }
    }
    out.sort();
    out
}

pub fn support(x: &[u64]) -> Vec<usize> {
    (0..x.len()).filter(|&e| x[e] > 0).collect()
}

/// Inclusion-minimal supports among nonzero magic labelings of sum at most
/// `max_sum`.
pub fn brute_minimal_supports(host: &Host, max_sum: u64) -> Vec<Vec<usize>> {
    let mut supports: Vec<Vec<usize>> = (1..=max_sum)
        .flat_map(|r| brute_magic(host, r))
        .map(|x| support(&x))
        .collect();
    supports.sort();
    supports.dedup();
    let subset = |a: &Vec<usize>, b: &Vec<usize>| a.iter().all(|e| b.contains(e));
    let minimal: Vec<Vec<usize>> = supports
        .iter()
        .filter(|s| !supports.iter().any(|t| t != *s && subset(t, s)))
        .cloned()
        .collect();
    minimal
}

/// Rank over the rationals by plain fraction-free elimination in i128.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let (a, b) = (m[rank][c], m[i][c]);
                let pivot = m[rank].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x = *x * a - y * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn double_factorial(n: u64) -> u64 {
    (1..=n).rev().step_by(2).product()
}

/// Perfect matchings by brute force over edge subsets.
pub fn brute_perfect_matchings(host: &Host) -> usize {
    let q = host.edge_count();
    (0u64..1 << q)
        .filter(|mask| {
            let x: Vec<u64> = (0..q).map(|e| (mask >> e) & 1).collect();
            host.magic_sum_of(&x) == Some(1)
        })
        .count()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn c5() -> Host {
    cycle_graph(5).unwrap()
}

/// Small graphs used across the oracle tests, with at most 10 edges.
pub fn small_graphs() -> Vec<(&'static str, Host)> {
    vec![
        ("K3", complete_graph(3).unwrap()),
        ("K4", complete_graph(4).unwrap()),
        ("C4", cycle_graph(4).unwrap()),
        ("C5", c5()),
        ("K5", complete_graph(5).unwrap()),
        ("Gamma3", complete_general_graph(3).unwrap()),
        ("Gamma4", complete_general_graph(4).unwrap()),
        ("K33", complete_bipartite(3, 3).unwrap()),
        ("K23", complete_bipartite(2, 3).unwrap()),
        (
            "bowtie",
            Host::graph(
                vec!["1", "2", "3", "4", "5"],
                &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)],
            )
            .unwrap(),
        ),
        (
            "prism",
            Host::graph(
                vec!["1", "2", "3", "4", "5", "6"],
                &[
                    (0, 1),
                    (1, 2),
                    (0, 2),
                    (3, 4),
                    (4, 5),
                    (3, 5),
                    (0, 3),
                    (1, 4),
                    (2, 5),
                ],
            )
            .unwrap(),
        ),
        (
            "triangle-with-pendant",
            Host::graph(vec!["1", "2", "3", "4"], &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap(),
        ),
        (
            "double-edge",
            Host::graph(vec!["1", "2", "3"], &[(0, 1), (0, 1), (1, 2), (0, 2)]).unwrap(),
        ),
    ]
}

pub fn small_digraphs() -> Vec<(&'static str, Host)> {
    vec![
        ("Pi2", complete_digraph(2).unwrap()),
        ("Pi3", complete_digraph(3).unwrap()),
        ("dicycle3", directed_cycle(3).unwrap()),
        ("dicycle4", directed_cycle(4).unwrap()),
        (
            "two-cycles",
            Host::digraph(
                vec!["1", "2", "3", "4"],
                &[(0, 1), (1, 0), (1, 2), (2, 3), (3, 1), (0, 0)],
            )
            .unwrap(),
        ),
        (
            "arc-and-loop",
            Host::digraph(vec!["1", "2"], &[(0, 1), (1, 1), (0, 0)]).unwrap(),
        ),
        (
            "bidirected-path",
            Host::digraph(vec!["1", "2", "3"], &[(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap(),
        ),
    ]
}

pub fn all_hosts() -> Vec<(&'static str, Host)> {
    let mut v = small_graphs();
    v.extend(small_digraphs());
    v
}
