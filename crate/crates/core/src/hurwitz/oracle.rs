use std::collections::HashMap;

use num::BigInt;

use crate::error::{Error, Result};
use crate::series::Rational;
use crate::symfun::Partition;

pub const ORACLE_MAX_DEGREE: u32 = 6;
pub const ORACLE_MAX_STEPS: u32 = 7;

type Perm = Vec<u8>;

struct Search {
    target: Perm,
    transpositions: Vec<(usize, usize)>,
    memo: HashMap<(u32, Perm, Vec<u8>), u64>,
}

fn relabel(comp: &mut [u8]) {
    let mut map = [u8::MAX; 16];
    let mut next = 0u8;
    for c in comp.iter_mut() {
        if map[*c as usize] == u8::MAX {
            map[*c as usize] = next;
            next += 1;
        }
        *c = map[*c as usize];
    }
}

impl Search {
    fn count(&mut self, steps: u32, perm: &Perm, comp: &Vec<u8>) -> u64 {
        if steps == 0 {
            let transitive = comp.iter().all(|&c| c == 0);
            return u64::from(transitive && *perm == self.target);
        }
        let key = (steps, perm.clone(), comp.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for t in 0..self.transpositions.len() {
            let (a, b) = self.transpositions[t];
            // perm * (a b): swap the images of a and b
            let mut next = perm.clone();
            next.swap(a, b);
            let mut c = comp.clone();
            let (ca, cb) = (c[a], c[b]);
            if ca != cb {
                for x in c.iter_mut() {
                    if *x == cb {
                        *x = ca;
                    }
                }
                relabel(&mut c);
            }
            total += self.count(steps - 1, &next, &c);
        }
        self.memo.insert(key, total);
        total
    }
}

/// Brute-force `h^c(lambda, m)`: tuples of `m` transpositions and a
/// permutation `sigma` of cycle type `lambda` with product the identity,
/// generating a transitive subgroup, divided by `d!`.
pub fn closed_hurwitz_oracle(lambda: &Partition, m: u32) -> Result<Rational> {
    let d = lambda.weight();
    if d == 0 {
        return Err(Error::InvalidArgument("oracle needs |lambda| >= 1".into()));
    }
    if d > ORACLE_MAX_DEGREE || m > ORACLE_MAX_STEPS {
        return Err(Error::OracleBounds { d, m });
    }
    let n = d as usize;
    // sigma0 built from consecutive cycles; target is sigma0^{-1}
    let mut sigma = vec![0u8; n];
    let mut comp = vec![0u8; n];
    let mut start = 0usize;
    for (ci, &len) in lambda.parts().iter().enumerate() {
        let len = len as usize;
        for j in 0..len {
            sigma[start + j] = (start + (j + 1) % len) as u8;
            comp[start + j] = ci as u8;
        }
        start += len;
    }
    let mut target = vec![0u8; n];
    for (i, &s) in sigma.iter().enumerate() {
        target[s as usize] = i as u8;
    }
    let transpositions = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .collect();
    let mut search = Search {
        target,
        transpositions,
        memo: HashMap::new(),
    };
    let identity: Perm = (0..n as u8).collect();
    relabel(&mut comp);
    let count = search.count(m, &identity, &comp);
    Ok(Rational::new(BigInt::from(count), lambda.z()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn tiny_cases() {
        assert_eq!(closed_hurwitz_oracle(&part(&[1]), 0).unwrap(), rat(1, 1));
        assert_eq!(closed_hurwitz_oracle(&part(&[2]), 1).unwrap(), rat(1, 2));
        assert_eq!(closed_hurwitz_oracle(&part(&[1, 1]), 2).unwrap(), rat(1, 2));
        assert_eq!(closed_hurwitz_oracle(&part(&[2]), 3).unwrap(), rat(1, 2));
        assert_eq!(closed_hurwitz_oracle(&part(&[3]), 2).unwrap(), rat(1, 1));
    }

    #[test]
    fn degenerate_m_zero() {
        for lambda in crate::symfun::partitions_up_to(5).into_iter().skip(1) {
            let expected = if lambda == part(&[1]) { rat(1, 1) } else { rat(0, 1) };
            assert_eq!(closed_hurwitz_oracle(&lambda, 0).unwrap(), expected);
        }
    }

    #[test]
    fn bounds() {
        assert_eq!(closed_hurwitz_oracle(&part(&[7]), 1), Err(Error::OracleBounds { d: 7, m: 1 }));
        assert!(closed_hurwitz_oracle(&part(&[2]), 8).is_err());
        assert!(closed_hurwitz_oracle(&Partition::empty(), 0).is_err());
    }
}
