use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::factorial;

/// Weakly decreasing sequence of positive integers.
///
/// Ordering is by weight, then reverse lexicographic within a weight, so
/// `(3) < (2,1) < (1,1,1)` and the empty partition comes first.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument("partition parts must be weakly decreasing".into()));
        }
        parts.shrink_to_fit();
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `lambda_i` with 1-based index, zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Centralizer order `z_lambda = prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::from(1), |acc, (i, m)| {
                acc * BigInt::from(i).pow(m) * factorial(m)
            })
    }

    /// Multiset union (the partition of `p_lambda * p_mu`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            if j == other.0.len() || (i < self.0.len() && self.0[i] >= other.0[j]) {
                v.push(self.0[i]);
                i += 1;
            } else {
                v.push(other.0[j]);
                j += 1;
            }
        }
        Partition(v)
    }

    /// Removes one part equal to `n`, if present.
    pub fn remove_part(&self, n: u32) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == n)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Partition(v))
    }

    pub fn add_part(&self, n: u32) -> Partition {
        self.union(&Partition::row(n))
    }

    /// True if every part is 1 (the t1-line monomials `p_1^k`).
    pub fn is_column(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    pub fn conjugate(&self) -> Partition {
        let l1 = self.part(1);
        Partition((1..=l1).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in canonical (reverse lexicographic) order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

/// All partitions of weight at most `n`, in canonical order.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}
