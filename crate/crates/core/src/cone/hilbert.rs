use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use rayon::prelude::*;
use rustc_hash::FxHashSet;

use crate::graph::{ConstraintSystem, Host, HostKind, Labeling};
use crate::{Error, HilbertAlgorithm, Limits, Result};

/// The minimal Hilbert basis of a cone of magic labelings, sorted by magic
/// sum and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    host: Host,
    elements: Vec<Labeling>,
}

impl HilbertBasis {
    pub fn host(&self) -> &Host {
        &self.host
    }

    pub fn elements(&self) -> &[Labeling] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Labeling> {
        self.elements.iter()
    }

    pub fn contains(&self, values: &[u64]) -> bool {
        self.elements.iter().any(|e| e.values() == values)
    }
}

impl<'a> IntoIterator for &'a HilbertBasis {
    type Item = &'a Labeling;
    type IntoIter = std::slice::Iter<'a, Labeling>;
    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

pub fn hilbert_basis(cs: &ConstraintSystem) -> Result<HilbertBasis> {
    hilbert_basis_with(cs, &Limits::default())
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Minimal nonzero nonnegative solutions of `matrix * x = 0`, computed with
/// the algorithm chosen in `limits`.
pub fn hilbert_basis_with(cs: &ConstraintSystem, limits: &Limits) -> Result<HilbertBasis> {
    let q = cs.column_count();
    Limits::check("edge count", q as u64, limits.max_edges as u64)?;
    let host = cs.host().clone();
    let solutions = match limits.hilbert {
        HilbertAlgorithm::Completion => completion(cs),
        HilbertAlgorithm::Intersection => intersection(cs),
    };
    let mut elements = solutions
        .into_iter()
        .map(|x| Labeling::new(&host, x))
        .collect::<Result<Vec<_>>>()?;
    if let Some(bad) = elements.iter().find(|l| !l.is_magic()) {
        return Err(Error::internal(format!(
            "basis computation produced a non-magic vector {:?}",
            bad.values()
        )));
    }
    elements.sort_by(|a, b| a.canonical_cmp(b));
    elements.dedup();
    Ok(HilbertBasis { host, elements })
}

fn unit_vectors(q: usize) -> impl Iterator<Item = Vec<u64>> {
    (0..q).map(move |j| {
        let mut x = vec![0; q];
        x[j] = 1;
        x
    })
}

fn le(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Completion proceeds level by level in the total `|x|_1`. A non-solution
/// `x` with defect `d = A x` is only extended along columns `a_j` with
/// `<d, a_j> < 0`, and a candidate is dropped as soon as it dominates an
/// already found solution. The frontier is kept sorted so the output does
/// not depend on scheduling.
fn completion(cs: &ConstraintSystem) -> Vec<Vec<u64>> {
    let q = cs.column_count();
    let columns: Vec<Vec<i64>> = (0..q)
        .map(|j| cs.matrix().iter().map(|row| row[j]).collect())
        .collect();

    let mut solutions: Vec<Vec<u64>> = Vec::new();
    let mut frontier: BTreeSet<Vec<u64>> = unit_vectors(q).collect();

    while !frontier.is_empty() {
        let level: Vec<(Vec<u64>, Vec<i64>)> = frontier
            .into_iter()
            .map(|x| {
                let d = cs.defect(&x);
                (x, d)
            })
            .collect();
        let (found, open): (Vec<_>, Vec<_>) = level
            .into_iter()
            .partition(|(_, d)| d.iter().all(|&v| v == 0));
        solutions.extend(found.into_iter().map(|(x, _)| x));

        let known = &solutions;
        let columns = &columns;
        let next: Vec<Vec<u64>> = open
            .par_iter()
            .flat_map_iter(|(x, d)| {
                (0..q).filter_map(move |j| {
                    if dot(d, &columns[j]) >= 0 {
                        return None;
                    }
                    let mut y = x.clone();
                    y[j] += 1;
                    let dominated = known.iter().any(|s| le(s, &y));
                    (!dominated).then_some(y)
                })
            })
            .collect();
        frontier = next.into_iter().collect();
    }
    solutions
}

/// Cuts the orthant down by one constraint row at a time. For a row `a`,
/// the basis of `C ∩ {a x = 0}` is read off from the irreducible elements of
/// `C` graded by the sign and size of `a x`: sums `z = x + y` with
/// `a x > 0 > a y` are produced in order of `|z|_1`, and `z` is kept unless
/// some kept `u <= z` has `a u` between 0 and `a z`.
fn intersection(cs: &ConstraintSystem) -> Vec<Vec<u64>> {
    let q = cs.column_count();
    let mut basis: Vec<Vec<u64>> = unit_vectors(q).collect();
    for &r in &row_order(cs) {
        basis = cut(basis, &cs.matrix()[r]);
    }
    basis
}

/// Digraph rows alternate between in- and out-sums, which keeps the
/// intermediate bases far smaller than taking all out-sums first.
fn row_order(cs: &ConstraintSystem) -> Vec<usize> {
    let rows = cs.row_count();
    match cs.kind() {
        HostKind::Digraph if rows > 0 => {
            // rows: out_2..out_n, then in_1..in_n
            let n = cs.host().vertex_count();
            let mut order = vec![n - 1];
            for i in 0..n - 1 {
                order.push(i);
                order.push(n + i);
            }
            order
        }
        _ => (0..rows).collect(),
    }
}

fn cut(basis: Vec<Vec<u64>>, row: &[i64]) -> Vec<Vec<u64>> {
    let value = |x: &[u64]| -> i64 { x.iter().zip(row).map(|(&a, &b)| a as i64 * b).sum() };
    let mut positive: Vec<(Vec<u64>, i64)> = Vec::new();
    let mut negative: Vec<(Vec<u64>, i64)> = Vec::new();
    let mut zero: Vec<Vec<u64>> = Vec::new();
    let mut seen: FxHashSet<Vec<u64>> = FxHashSet::default();
    let mut queue = BinaryHeap::new();
    for x in basis {
        seen.insert(x.clone());
        queue.push(Reverse((x.iter().sum::<u64>(), x)));
    }
    while let Some(Reverse((_, z))) = queue.pop() {
        let v = value(&z);
        let reducible = zero.iter().any(|u| le(u, &z))
            || match v.signum() {
                1 => positive.iter().any(|(u, w)| *w <= v && le(u, &z)),
                -1 => negative.iter().any(|(u, w)| *w >= v && le(u, &z)),
                _ => false,
            };
        if reducible {
            continue;
        }
        let partners = match v.signum() {
            1 => &negative,
            -1 => &positive,
            _ => {
                zero.push(z);
                continue;
            }
        };
        for (y, _) in partners {
            let s: Vec<u64> = z.iter().zip(y).map(|(a, b)| a + b).collect();
            if seen.insert(s.clone()) {
                queue.push(Reverse((s.iter().sum::<u64>(), s)));
            }
        }
        if v > 0 {
            positive.push((z, v));
        } else {
            negative.push((z, v));
        }
    }
    zero
}

/// Whether a magic labeling is one of the basis elements.
pub fn is_irreducible(l: &Labeling, hb: &HilbertBasis) -> Result<bool> {
    if l.host() != hb.host() {
        return Err(Error::structural(
            "labeling and basis live on different hosts",
        ));
    }
    if !l.is_magic() {
        return Err(Error::precondition("labeling is not magic"));
    }
    Ok(hb.contains(l.values()))
}
