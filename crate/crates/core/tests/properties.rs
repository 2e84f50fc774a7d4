mod common;

use magiclat::apps::{
    factorizations, labeling_to_semimagic, labeling_to_symmetric, semimagic_to_labeling,
    symmetric_to_labeling, SemiMagicHost, SquareMatrix,
};
use magiclat::cone::{decompose, hilbert_basis};
use magiclat::ehrhart::count_magic;
use magiclat::faces::enumerate_faces;
use magiclat::graph::io::{parse_edge_list, write_edge_list};
use magiclat::graph::{cayley_digraph, digraph_to_bipartite, GroupTable};
use magiclat::{
    build_constraints, complete_digraph, complete_general_graph, Host, HostKind, Labeling,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn host_strategy(kind: HostKind) -> impl Strategy<Value = Host> {
    (2usize..=5).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 1..=8).prop_map(move |edges| {
            let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            Host::new(kind, names, &edges).unwrap()
        })
    })
}

fn relabel(host: &Host, perm: &[usize]) -> Host {
    let names: Vec<String> = (0..host.vertex_count())
        .map(|i| format!("w{}", perm[i]))
        .collect();
    let mut order = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        order[p] = i;
    }
    let names: Vec<String> = order.iter().map(|&i| names[i].clone()).collect();
    let edges: Vec<(usize, usize)> = host
        .edges()
        .iter()
        .map(|&(u, v)| (perm[u], perm[v]))
        .collect();
    Host::new(host.kind(), names, &edges).unwrap()
}

fn any_host() -> impl Strategy<Value = Host> {
    prop_oneof![
        host_strategy(HostKind::Graph),
        host_strategy(HostKind::Digraph)
    ]
}

fn sums_of_basis(host: &Host) -> Vec<u64> {
    let hb = hilbert_basis(&build_constraints(host).unwrap()).unwrap();
    let mut s: Vec<u64> = hb.iter().map(|l| l.magic_sum().unwrap()).collect();
    s.sort();
    s
}

fn count_matrices(n: usize, r: u64, symmetric: bool) -> usize {
    let cells = n * n;
    let mut count = 0;
    let mut m = vec![0u64; cells];
    loop {
        let rows = (0..n).all(|i| (0..n).map(|j| m[i * n + j]).sum::<u64>() == r);
        let cols = (0..n).all(|j| (0..n).map(|i| m[i * n + j]).sum::<u64>() == r);
        let sym = !symmetric || (0..n).all(|i| (0..n).all(|j| m[i * n + j] == m[j * n + i]));
        if rows && cols && sym {
            count += 1;
        }
        let mut k = 0;
        while k < cells && m[k] == r {
            m[k] = 0;
            k += 1;
        }
        if k == cells {
            return count;
        }
        m[k] += 1;
    }
}

#[test]
fn pi_counts_match_semimagic_squares() {
    for n in 1..=3 {
        let pi = complete_digraph(n).unwrap();
        let gamma = complete_general_graph(n).unwrap();
        for r in 0..=3 {
            assert_eq!(
                count_magic(&pi, r).unwrap(),
                BigUint::from(count_matrices(n, r, false))
            );
            assert_eq!(
                count_magic(&gamma, r).unwrap(),
                BigUint::from(count_matrices(n, r, true))
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariant_under_vertex_relabelling(
        host in any_host(),
        seed in any::<u64>(),
    ) {
        let n = host.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let other = relabel(&host, &perm);
        prop_assert_eq!(sums_of_basis(&host), sums_of_basis(&other));
        for r in 0..=3 {
            prop_assert_eq!(count_magic(&host, r).unwrap(), count_magic(&other, r).unwrap());
        }
        let a = enumerate_faces(&host).unwrap();
        let b = enumerate_faces(&other).unwrap();
        prop_assert_eq!(a.f_vector(), b.f_vector());
    }

    #[test]
    fn basis_is_an_antichain(host in any_host()) {
        let hb = hilbert_basis(&build_constraints(&host).unwrap()).unwrap();
        for (i, x) in hb.iter().enumerate() {
            for (j, y) in hb.iter().enumerate() {
                prop_assert!(i == j || !x.is_dominated_by(y));
            }
        }
    }

    #[test]
    fn combinations_decompose_and_factor(
        host in host_strategy(HostKind::Graph),
        coeffs in prop::collection::vec(0u64..3, 16),
    ) {
        let hb = hilbert_basis(&build_constraints(&host).unwrap()).unwrap();
        let mut x = vec![0; host.edge_count()];
        for (l, &c) in hb.iter().zip(&coeffs) {
            for (s, v) in x.iter_mut().zip(l.values()) {
                *s += c * v;
            }
        }
        let l = Labeling::new(&host, x.clone()).unwrap();
        prop_assert!(l.is_magic());
        let mut back = vec![0; x.len()];
        for (i, c) in decompose(&l, &hb).unwrap() {
            for (s, v) in back.iter_mut().zip(hb.elements()[i].values()) {
                *s += c * v;
            }
        }
        prop_assert_eq!(&back, &x);
        for fs in factorizations(&l, None).unwrap() {
            let mut total = vec![0; x.len()];
            for f in &fs {
                prop_assert!(f.magic_sum().unwrap() > 0);
                for (t, &v) in total.iter_mut().zip(f.values()) {
                    prop_assert!(*t == 0 || v == 0);
                    *t += v;
                }
            }
            prop_assert_eq!(&total, &x);
        }
    }

    #[test]
    fn digraph_counts_follow_bipartite_image(host in host_strategy(HostKind::Digraph)) {
        let img = digraph_to_bipartite(&host).unwrap();
        for r in 0..=3 {
            prop_assert_eq!(count_magic(&host, r).unwrap(), count_magic(&img.graph, r).unwrap());
        }
        let ones = vec![1; host.edge_count()];
        prop_assert_eq!(host.is_eulerian(), host.magic_sum_of(&ones).is_some());
    }

    #[test]
    fn edge_lists_round_trip(host in any_host(), labels in prop::collection::vec(0u64..9, 8)) {
        let l = Labeling::new(&host, labels[..host.edge_count()].to_vec()).unwrap();
        let text = write_edge_list(&host, Some(&l));
        let parsed = parse_edge_list(&text).unwrap();
        prop_assert_eq!(&parsed.host, &host);
        prop_assert_eq!(parsed.labeling.as_ref(), Some(&l));
    }

    #[test]
    fn semimagic_conversions_invert(
        n in 1usize..=4,
        cells in prop::collection::vec(0u64..6, 16),
    ) {
        let rows: Vec<Vec<u64>> = cells.chunks(4).take(n).map(|c| c[..n].to_vec()).collect();
        let m = SquareMatrix::new(rows).unwrap();
        for target in [SemiMagicHost::Digraph, SemiMagicHost::Bipartite] {
            let l = semimagic_to_labeling(&m, target).unwrap();
            prop_assert_eq!(l.magic_sum(), m.is_semi_magic());
            prop_assert_eq!(&labeling_to_semimagic(&l).unwrap(), &m);
        }
    }

    #[test]
    fn symmetric_conversions_invert(
        n in 1usize..=4,
        cells in prop::collection::vec(0u64..6, 16),
    ) {
        let rows: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| cells[i.min(j) * 4 + i.max(j)]).collect())
            .collect();
        let m = SquareMatrix::new(rows).unwrap();
        let l = symmetric_to_labeling(&m).unwrap();
        prop_assert_eq!(l.magic_sum(), m.is_semi_magic());
        prop_assert_eq!(&labeling_to_symmetric(&l).unwrap(), &m);
    }

    #[test]
    fn cayley_sum_for_relabelled_cyclic_groups(n in 1usize..=8, seed in any::<u64>()) {
        let z = GroupTable::cyclic(n).unwrap();
        // shuffle the non-identity elements; the identity stays last
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n.saturating_sub(1)).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let table: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| perm[z.product(inv[i], inv[j])]).collect())
            .collect();
        let g = GroupTable::from_zero_based(table).unwrap();
        let c = cayley_digraph(&g).unwrap();
        prop_assert_eq!(c.alpha.magic_sum(), Some((n * (n - 1) / 2) as u64));
    }
}
