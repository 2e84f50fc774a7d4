use std::cmp::Ordering;

use super::Host;
use crate::{Error, Result};

/// A nonnegative integer edge vector on a host, in canonical edge order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeling {
    host: Host,
    values: Vec<u64>,
    magic_sum: Option<u64>,
}

impl Labeling {
    pub fn new(host: &Host, values: Vec<u64>) -> Result<Labeling> {
        if values.len() != host.edge_count() {
            return Err(Error::malformed(format!(
                "labeling has {} values but the host has {} edges",
                values.len(),
                host.edge_count()
            )));
        }
        let magic_sum = host.magic_sum_of(&values);
        Ok(Labeling {
            host: host.clone(),
            values,
            magic_sum,
        })
    }

    pub fn zero(host: &Host) -> Labeling {
        Labeling::new(host, vec![0; host.edge_count()]).expect("length matches")
    }

    pub fn host(&self) -> &Host {
        &self.host
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u64> {
        self.values
    }

    pub fn magic_sum(&self) -> Option<u64> {
        self.magic_sum
    }

    pub fn is_magic(&self) -> bool {
        self.magic_sum.is_some()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&x| x == 0)
    }

    /// Indices of the edges with a nonzero label.
    pub fn support(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Componentwise `self <= other`.
    pub fn is_dominated_by(&self, other: &Labeling) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// Order by magic sum (non-magic last), then lexicographically by values.
    pub fn canonical_cmp(&self, other: &Labeling) -> Ordering {
        let key = |l: &Labeling| l.magic_sum.unwrap_or(u64::MAX);
        key(self)
            .cmp(&key(other))
            .then_with(|| self.values.cmp(&other.values))
    }
}

/// The common vertex sum of a magic labeling, `None` otherwise.
pub fn magic_sum(l: &Labeling) -> Option<u64> {
    l.magic_sum()
}
