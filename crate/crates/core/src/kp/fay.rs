use std::collections::BTreeMap;

use super::tau::{tau_shift, Sign};
use crate::error::{Error, Result};
use crate::series::{expand_shift, int, Key, LaurentX, ShiftBase, SymSeries, TruncationProfile};

/// Residual of the differential Fay identity, keyed by
/// `(outer x exponent, shift-variable exponents a, b)`; the outer exponent is
/// 0 unless the tau-function has Laurent coefficients itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FayResidual {
    pub profile: TruncationProfile,
    pub terms: BTreeMap<(i32, i32, i32), SymSeries>,
}

impl FayResidual {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// First nonzero coefficient in canonical order.
    pub fn witness(&self) -> Option<((i32, i32, i32), Key, SymSeries)> {
        self.terms.iter().next().map(|(e, s)| {
            let (k, c) = s.terms().next().expect("stored residuals are nonzero");
            (*e, k.clone(), SymSeries::monomial(k.lambda.clone(), k.q1, k.q2, c.clone(), self.profile))
        })
    }

    fn add(&mut self, outer: i32, a: i32, b: i32, s: &SymSeries) {
        if s.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((outer, a, b))
            .or_insert_with(|| SymSeries::zero(s.profile().to_owned()));
        *entry = &*entry + s;
        if entry.is_zero() {
            self.terms.remove(&(outer, a, b));
        }
    }
}

type Grid = BTreeMap<(i32, i32), SymSeries>;

fn shift_two(f: &SymSeries) -> Result<Grid> {
    let mut out = Grid::new();
    for (a, s) in tau_shift(f, Sign::Minus)?.terms() {
        for (b, t) in expand_shift(s, ShiftBase::X, &int(-1))?.terms() {
            out.insert((a, b), t.clone());
        }
    }
    Ok(out)
}

/// `(x-z)(f_{xz} g - f_x g_z) - (d f_x) g_z + f_x (d g_z)` where
/// `f_x = f(t - [x^{-1}])`, `f_{xz} = f(t - [x^{-1}] - [z^{-1}])`, `d = d/dt_1`.
/// Terms beyond graded degree `weight - 1` (with `x`, `z` of degree `-1`)
/// are discarded since truncation cannot certify them.
fn bilinear(f: &SymSeries, g: &SymSeries, add: &mut impl FnMut(i32, i32, SymSeries)) -> Result<()> {
    let profile = *f.profile();
    let top = profile.max_p_weight as i32 - 1;
    let keep = |s: SymSeries, a: i32, b: i32| s.filter(|k| k.lambda.weight() as i32 - a - b <= top);
    let fx = tau_shift(f, Sign::Minus)?;
    let gz = tau_shift(g, Sign::Minus)?;
    let fxz = shift_two(f)?;
    let mut inner = Grid::new();
    let push = |grid: &mut Grid, a: i32, b: i32, s: SymSeries| {
        if s.is_zero() {
            return;
        }
        let e = grid.entry((a, b)).or_insert_with(|| SymSeries::zero(profile));
        *e = &*e + &s;
    };
    for (&(a, b), s) in &fxz {
        push(&mut inner, a, b, s.checked_mul(g)?);
    }
    for (a, sa) in fx.terms() {
        for (b, sb) in gz.terms() {
            push(&mut inner, a, b, -&sa.checked_mul(sb)?);
        }
    }
    for ((a, b), s) in inner {
        add(a + 1, b, keep(s.clone(), a + 1, b));
        add(a, b + 1, keep(-&s, a, b + 1));
    }
    for (a, sa) in fx.terms() {
        let dsa = sa.derive_t(1);
        for (b, sb) in gz.terms() {
            let s = &sa.checked_mul(&sb.derive_t(1))? - &dsa.checked_mul(sb)?;
            add(a, b, keep(s, a, b));
        }
    }
    Ok(())
}

fn check_window(profile: &TruncationProfile, r: &FayResidual) -> Result<()> {
    for &(_, a, b) in r.terms.keys() {
        for e in [a, b] {
            if !profile.admits_x(e) {
                return Err(Error::WindowExhausted {
                    var: "x",
                    exponent: e as i64,
                    low: profile.x_low as i64,
                    high: profile.x_high as i64,
                });
            }
        }
    }
    Ok(())
}

/// Differential Fay residual of `tau`; zero for a KP tau-function.
pub fn fay_residual(tau: &SymSeries) -> Result<FayResidual> {
    let profile = *tau.profile();
    let mut r = FayResidual {
        profile,
        terms: BTreeMap::new(),
    };
    bilinear(tau, tau, &mut |a, b, s| r.add(0, a, b, &s))?;
    check_window(&profile, &r)?;
    Ok(r)
}

/// Fay residual for a tau-function with coefficients in `K((x^{-1}))`,
/// given as `sum_K S_K x^K`.
pub fn fay_residual_extended(tau: &LaurentX) -> Result<FayResidual> {
    let profile = *tau.profile();
    let mut r = FayResidual {
        profile,
        terms: BTreeMap::new(),
    };
    let parts: Vec<(i32, SymSeries)> = tau.terms().map(|(k, s)| (k, s.clone())).collect();
    for (n, sn) in &parts {
        for (m, sm) in &parts {
            bilinear(sn, sm, &mut |a, b, s| r.add(n + m, a, b, &s))?;
        }
    }
    check_window(&profile, &r)?;
    Ok(r)
}
