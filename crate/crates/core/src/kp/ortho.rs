use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fock::{LaurentRow, Rows};
use crate::series::SymSeries;

/// Rows of the annihilator of `rows` under `(f, g) = res_{z=0} f g`, at level
/// `-N`. Dual row `i` is `g_b = z^b (1 + sum_s g_{b,s} z^s)`, `b = -N - i`, with
/// `g_{b,s} = 0` for `0 < s < -b-N` and
/// `g_{b,n} = -sum_{s<n} f_{a,n-s} g_{b,s}`, `a = -1-b-n`, beyond.
pub fn ortho_rows(rows: &Rows) -> Result<Rows> {
    let level = rows.level;
    for (idx, r) in rows.head.iter().enumerate() {
        let expected = level - idx as i32 - 1;
        if !r.is_normalized_at(expected) {
            return Err(Error::InvalidArgument(format!(
                "row {} is not normalized at z^{expected}; leading minors degenerate",
                idx + 1
            )));
        }
    }
    let src = rows.clone();
    let profile = rows.profile;
    let tail = Arc::new(move |i: usize, max_exp: i32| {
        let b = -level - i as i32;
        let n0 = -b - level;
        let top = (max_exp - b).max(0);
        let mut g: Vec<SymSeries> = vec![SymSeries::zero(profile); top as usize + 1];
        g[0] = SymSeries::one(profile);
        for n in n0..=top {
            let a = -1 - b - n;
            let row = src.row((level - a) as usize, -1 - b);
            let mut acc = SymSeries::zero(profile);
            for s in 0..n {
                if g[s as usize].is_zero() {
                    continue;
                }
                let f = row.at(a + n - s, profile);
                if !f.is_zero() {
                    acc = &acc + &(&f * &g[s as usize]);
                }
            }
            g[n as usize] = -&acc;
        }
        LaurentRow::new(b, g)
    });
    Ok(Rows::new(-level, profile, vec![]).with_tail(tail))
}
