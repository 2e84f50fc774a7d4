use super::{Host, Labeling};
use crate::{Error, Result};

/// A validated group multiplication table, stored 0-based.
///
/// `product(i, j)` is the index of `g_i * g_j`. The identity must be the
/// last element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates a table written with 1-based element indices.
    pub fn from_one_based(rows: Vec<Vec<usize>>) -> Result<GroupTable> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroup("table is empty".into()));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidGroup(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                rows[i].len()
            )));
        }
        let mut table = vec![vec![0; n]; n];
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(Error::InvalidGroup(format!(
                        "closure: entry ({}, {}) = {x} is outside 1..{n}",
                        i + 1,
                        j + 1
                    )));
                }
                table[i][j] = x - 1;
            }
        }
        Self::from_zero_based(table)
    }

    pub fn from_zero_based(table: Vec<Vec<usize>>) -> Result<GroupTable> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n) || table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::InvalidGroup(
                "closure: table is not an n x n table over 0..n".into(),
            ));
        }
        let e = n - 1;
        if (0..n).any(|i| table[e][i] != i || table[i][e] != i) {
            return Err(Error::InvalidGroup(format!(
                "identity: the last element g_{n} is not a two-sided identity"
            )));
        }
        let mut inverse = vec![0; n];
        for i in 0..n {
            match (0..n).find(|&j| table[i][j] == e && table[j][i] == e) {
                Some(j) => inverse[i] = j,
                None => {
                    return Err(Error::InvalidGroup(format!(
                        "inverses: g_{} has no two-sided inverse",
                        i + 1
                    )))
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity: (g_{0} g_{1}) g_{2} != g_{0} (g_{1} g_{2})",
                            a + 1,
                            b + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(GroupTable { table, inverse })
    }

    /// The cyclic group Z_n with `g_k = k mod n`, so `g_n` is the identity.
    pub fn cyclic(n: usize) -> Result<GroupTable> {
        if n == 0 {
            return Err(Error::InvalidGroup("table is empty".into()));
        }
        // 0-based index k stands for the residue k + 1
        let table = (0..n)
            .map(|i| (0..n).map(|j| ((i + 1) + (j + 1) + n - 1) % n).collect())
            .collect();
        Self::from_zero_based(table)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }
}

/// A Cayley group digraph with its α edge labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyDigraph {
    pub digraph: Host,
    /// Edge `v_i -> v_j` carries the 1-based `α` with `g_α = g_j g_i^{-1}`.
    pub alpha: Labeling,
}

pub fn cayley_digraph(group: &GroupTable) -> Result<CayleyDigraph> {
    let n = group.order();
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let digraph = Host::digraph(names, &edges)?;
    let values = digraph
        .edges()
        .iter()
        .map(|&(i, j)| (group.product(j, group.inverse(i)) + 1) as u64)
        .collect();
    let alpha = Labeling::new(&digraph, values)?;
    Ok(CayleyDigraph { digraph, alpha })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2() {
        let c = cayley_digraph(&GroupTable::cyclic(2).unwrap()).unwrap();
        assert_eq!(c.digraph.edges(), &[(0, 1), (1, 0)]);
        assert_eq!(c.alpha.values(), &[1, 1]);
        assert_eq!(c.alpha.magic_sum(), Some(1));
    }

    #[test]
    fn z3_sum() {
        let c = cayley_digraph(&GroupTable::cyclic(3).unwrap()).unwrap();
        assert_eq!(c.alpha.magic_sum(), Some(3));
    }

    #[test]
    fn cyclic_groups_up_to_eight() {
        for n in 1..=8usize {
            let c = cayley_digraph(&GroupTable::cyclic(n).unwrap()).unwrap();
            assert_eq!(
                c.alpha.magic_sum(),
                Some((n * (n - 1) / 2) as u64),
                "n = {n}"
            );
            assert!(c.alpha.values().iter().all(|&a| (1..n as u64).contains(&a)));
        }
    }

    #[test]
    fn validation_names_the_axiom() {
        let err = GroupTable::from_one_based(vec![vec![1, 2], vec![2, 2]]).unwrap_err();
        assert!(err.to_string().contains("identity"), "{err}");
        let err = GroupTable::from_one_based(vec![vec![1, 3], vec![1, 2]]).unwrap_err();
        assert!(err.to_string().contains("closure"), "{err}");
        // identity last but g_1 g_1 = g_1 twice in row: no inverse for g_1
        let err = GroupTable::from_one_based(vec![vec![1, 1], vec![1, 2]]).unwrap_err();
        assert!(err.to_string().contains("inverses"), "{err}");
        // identity first is rejected even though it is a group
        let err = GroupTable::from_one_based(vec![vec![1, 2], vec![2, 1]]).unwrap_err();
        assert!(err.to_string().contains("identity"), "{err}");
    }

    #[test]
    fn non_associative_loop_rejected() {
        // order-5 loop, every element self-inverse, identity at 0
        let t = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        // move the identity to the last slot
        let f = |x: usize| (x + 4) % 5;
        let mut table = vec![vec![0; 5]; 5];
        for a in 0..5 {
            for b in 0..5 {
                table[f(a)][f(b)] = f(t[a][b]);
            }
        }
        let err = GroupTable::from_zero_based(table).unwrap_err();
        assert!(err.to_string().contains("associativity"), "{err}");
    }
}
