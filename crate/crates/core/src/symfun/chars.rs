use std::cell::RefCell;
use std::collections::HashMap;

use super::partition::{partitions_of, Partition};

thread_local! {
    static CACHE: RefCell<HashMap<(Partition, Partition), i64>> = RefCell::new(HashMap::new());
}

/// Irreducible character `chi^lambda(mu)` by the Murnaghan-Nakayama rule
/// on beta-sets. Zero when the weights differ.
pub fn character(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.weight() != mu.weight() {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = CACHE.with(|c| c.borrow().get(&key).copied()) {
        return v;
    }
    let r = mu.part(1);
    let rest = mu.remove_part(r).expect("part present");
    let len = lambda.len();
    let beads: Vec<u32> = (0..len)
        .map(|i| lambda.part(i + 1) + (len - 1 - i) as u32)
        .collect();
    let mut total = 0i64;
    for (i, &b) in beads.iter().enumerate() {
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beads.iter().filter(|&&c| c > target && c < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut moved = beads.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (len - 1 - j) as u32)
            .filter(|&p| p > 0)
            .collect();
        let smaller = Partition::new(parts).expect("valid partition");
        total += sign * character(&smaller, &rest);
    }
    CACHE.with(|c| c.borrow_mut().insert(key, total));
    total
}

/// Character table of `S_n` with rows and columns in partition order.
#[derive(Clone, Debug)]
pub struct CharTable {
    pub n: u32,
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn new(n: u32) -> Self {
        let partitions = partitions_of(n);
        let values = partitions
            .iter()
            .map(|l| partitions.iter().map(|m| character(l, m)).collect())
            .collect();
        CharTable {
            n,
            partitions,
            values,
        }
    }

    pub fn index(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|q| q == p)
    }
}
