use std::sync::Arc;

use num::{BigInt, One};

use super::half;
use crate::error::{Error, Result};
use crate::fock::{boson_fermion, graded, wedge_from_rows, LaurentRow, QSlot, Rows};
use crate::series::{factorial, BetaScalar, BetaVar, Key, Rational, SymSeries, TruncationProfile};
use crate::symfun::{cutjoin_exp, CutJoinRoute, Partition};

/// How to build the closed partition function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedRoute {
    /// `Psi_0` of the wedge of Hurwitz rows.
    Fermionic,
    /// `exp(beta A) exp(q p_1)`.
    CutJoin,
}

/// Row `f_i = z^{-i} sum_l exp(beta l(l-2i+1)/2) (q z)^l / l!`, terms up to
/// `z^{max_exp}`, `q` on the `q1` slot and `beta` on `beta1`.
pub fn hurwitz_row(i: usize, max_exp: i32, profile: TruncationProfile) -> Result<LaurentRow> {
    let i = i as i64;
    let top = (max_exp as i64 + i).max(0);
    let mut coeffs = Vec::with_capacity(top as usize + 1);
    for l in 0..=top {
        let e = half(l * (l - 2 * i + 1))?;
        let c = BetaScalar::exp_of(BetaVar::B1, e, profile.beta_order)
            .scale(&Rational::new(BigInt::one(), factorial(l as u32)));
        coeffs.push(graded(c, QSlot::Q1, l as i32, profile));
    }
    Ok(LaurentRow::new(-(i as i32), coeffs))
}

/// The level-0 rows of the closed partition function.
pub fn closed_rows(profile: TruncationProfile) -> Rows {
    let tail = Arc::new(move |i: usize, max_exp: i32| {
        hurwitz_row(i, max_exp, profile).expect("l(l-2i+1) is even")
    });
    Rows::new(0, profile, vec![]).with_tail(tail)
}

/// `tau^c(p, beta, q)` with `q` on `q1` and `beta` on `beta1`.
pub fn closed_tau(profile: TruncationProfile, route: ClosedRoute) -> Result<SymSeries> {
    profile.validate()?;
    match route {
        ClosedRoute::Fermionic => {
            let w = wedge_from_rows(&closed_rows(profile), profile.max_p_weight)?;
            Ok(boson_fermion(&w))
        }
        ClosedRoute::CutJoin => {
            let qp1 = SymSeries::monomial(
                Partition::row(1),
                1,
                0,
                BetaScalar::one(profile.beta_order),
                profile,
            );
            Ok(cutjoin_exp(&qp1.exp()?, BetaVar::B1, CutJoinRoute::Schur))
        }
    }
}

/// `H^c = log tau^c`.
pub fn closed_free_energy(profile: TruncationProfile) -> Result<SymSeries> {
    closed_tau(profile, ClosedRoute::CutJoin)?.log()
}

/// `h^c(lambda, m)`: `m!` times the coefficient of `beta^m q^{|lambda|} p_lambda`
/// in `log tau^c`.
pub fn closed_hurwitz(lambda: &Partition, m: u32, profile: TruncationProfile) -> Result<Rational> {
    let d = lambda.weight();
    if d > profile.max_p_weight || d > profile.max_q1 || m > profile.beta_order {
        return Err(Error::OutOfProfile(format!(
            "h^c({lambda}, {m}) needs weight {d} and beta order {m}"
        )));
    }
    let h = closed_free_energy(profile)?;
    let c = h.get(&Key::new(lambda.clone(), d, 0)).map(|b| b.coeff(m, 0)).unwrap_or_default();
    Ok(c * Rational::from_integer(factorial(m)))
}
