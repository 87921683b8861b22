use num::{One, Zero};

use super::fay::fay_residual;
use super::report::{CheckReport, Witness};
use super::tau::{bd_apply, bd_coef, BdSeries, Direction, TauSeries};
use crate::error::{Error, Result};
use crate::series::{factorial, Rational, SymSeries};
use crate::symfun::Partition;

/// Outcome of a Backlund-Darboux detection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Detection {
    pub direction: Direction,
    pub c: BdSeries,
    /// First coefficient where `C` fails to reproduce the target, if any.
    pub witness: Option<Witness>,
}

impl Detection {
    pub fn success(&self) -> bool {
        self.witness.is_none()
    }
}

/// First key where `a` and `b` differ.
pub fn first_mismatch(a: &SymSeries, b: &SymSeries) -> Result<Option<Witness>> {
    let diff = a.checked_sub(b)?;
    let witness = diff.terms().next().map(|(k, c)| Witness::new(k, c, vec![]));
    Ok(witness)
}

/// Finds `C` with `tau_b = Coef_{x^0}(C(x) tau_a(t -+ [x^{-1}]) e^{+-xi})`, both
/// sides normalized to constant term 1. The coefficients `c_k` are fixed
/// one at a time on the `t_1`-line, then the full identity is checked.
pub fn bd_detect(tau_a: &SymSeries, tau_b: &SymSeries, direction: Direction, depth: usize) -> Result<Detection> {
    let a = TauSeries::new(tau_a.clone()).map_err(|_| Error::ZeroPivot)?.normalized()?;
    let b = TauSeries::new(tau_b.clone())?.normalized()?;
    let profile = *a.profile();
    let depth = depth.min(profile.max_p_weight as usize);
    let line_b = b.on_t1_line();
    let basis: Vec<SymSeries> = (0..=depth)
        .map(|i| {
            let mut unit = vec![SymSeries::zero(profile); i + 1];
            unit[i] = SymSeries::one(profile);
            bd_coef(&a, &BdSeries { coeffs: unit }, direction, 0).map(|s| s.on_t1_line())
        })
        .collect::<Result<_>>()?;
    let mut coeffs: Vec<SymSeries> = Vec::with_capacity(depth + 1);
    for k in 0..=depth {
        let col = Partition::new(vec![1; k]).expect("column");
        let mut rhs = line_b.coeff_of_p(&col);
        for (i, ci) in coeffs.iter().enumerate() {
            rhs = rhs.checked_sub(&ci.checked_mul(&basis[i].coeff_of_p(&col))?)?;
        }
        let pivot = basis[k].coeff_of_p(&col);
        let expected = Rational::new(
            if direction == Direction::Backward && k % 2 == 1 { -num::BigInt::one() } else { num::BigInt::one() },
            factorial(k as u32),
        );
        if pivot.constant_rational().is_zero() {
            return Err(Error::ZeroPivot);
        }
        debug_assert_eq!(pivot.constant_rational(), expected);
        coeffs.push(rhs.checked_div(&pivot)?);
    }
    let c = BdSeries { coeffs };
    let image = bd_apply(&a, &c, direction)?;
    let witness = first_mismatch(&image, &b)?;
    Ok(Detection { direction, c, witness })
}

/// Fay certificate for every member and forward detection between
/// consecutive members.
pub fn mkp_verify(taus: &[SymSeries], depth: usize) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for (i, t) in taus.iter().enumerate() {
        let r = fay_residual(t)?;
        let w = r.witness().map(|((o, a, b), k, s)| {
            let c = s.terms().next().map(|(_, c)| c.clone()).expect("nonzero");
            Witness::new(&k, &c, vec![o, a, b])
        });
        out.push(CheckReport::new(format!("fay[{i}]"), *t.profile(), w));
    }
    for (i, pair) in taus.windows(2).enumerate() {
        let d = bd_detect(&pair[0], &pair[1], Direction::Forward, depth)?;
        out.push(CheckReport::new(format!("bd[{i}->{}]", i + 1), *pair[0].profile(), d.witness));
    }
    Ok(out)
}
