//! Verification suites packaged as [`CheckReport`] lists.

use std::sync::Arc;

use crate::error::Result;
use crate::fock::{
    alpha_apply, alpha_apply_fermionic, boson_fermion, boson_fermion_vertex, cutjoin_deform_rows, exp_row,
    fermion_apply, wedge_from_rows, wedge_reduce_exp_row, Fermion, LaurentRow, QSlot, Rows, WedgeState,
};
use crate::hurwitz::{
    closed_hurwitz_oracle, closed_rows, closed_tau, closed_tau_merged, open_tau, open_tau1_via_d, open_tau_tilde,
    ClosedRoute,
};
use crate::kp::{
    adjoint_tau, bd_apply, bd_detect, exp_xi, explicit_bd_check, fay_residual, fay_residual_extended, first_mismatch,
    mkp_verify, ortho_rows, soliton_chain_step, soliton_tau, tau_shift, BdSeries, CheckReport, Direction, Sign,
    SolitonParams, Witness,
};
use crate::series::{BetaVar, Rational, SymSeries, TruncationProfile};
use crate::symfun::{cutjoin_apply, cutjoin_exp, partitions_up_to, schur_p, CutJoinRoute, Partition};

fn fay_report(name: &str, tau: &SymSeries) -> Result<CheckReport> {
    let r = fay_residual(tau)?;
    let w = r.witness().map(|((o, a, b), k, s)| {
        let c = s.terms().next().map(|(_, c)| c.clone()).expect("nonzero");
        Witness::new(&k, &c, vec![o, a, b])
    });
    Ok(CheckReport::new(name, *tau.profile(), w))
}

fn equality(name: &str, a: &SymSeries, b: &SymSeries) -> Result<CheckReport> {
    Ok(CheckReport::new(name, *a.profile(), first_mismatch(a, b)?))
}

/// Fay certificate for the closed partition function, its adjoint, and the
/// shifted function `tau^c(t - [x^{-1}]) e^{xi(t, x)}` over Laurent scalars.
pub fn suite_kp(closed: TruncationProfile) -> Result<Vec<CheckReport>> {
    let tau = closed_tau(closed, ClosedRoute::CutJoin)?;
    let mut out = vec![
        fay_report("kp/fay:closed", &tau)?,
        fay_report("kp/fay:closed-adjoint", &adjoint_tau(&tau))?,
    ];
    let tau1 = tau_shift(&tau, Sign::Minus)?.checked_mul(&exp_xi(Sign::Plus, closed)?)?;
    let r = fay_residual_extended(&tau1)?;
    let w = r.witness().map(|((o, a, b), k, s)| {
        let c = s.terms().next().map(|(_, c)| c.clone()).expect("nonzero");
        Witness::new(&k, &c, vec![o, a, b])
    });
    out.push(CheckReport::new("kp/fay:shifted-closed", closed, w));
    Ok(out)
}

/// Rescaled open partition functions for each `N`: Fay, then forward
/// detection between consecutive levels.
pub fn suite_mkp(open: TruncationProfile, levels: &[i64]) -> Result<Vec<CheckReport>> {
    let taus = levels
        .iter()
        .map(|&n| open_tau_tilde(n, open))
        .collect::<Result<Vec<_>>>()?;
    let mut out = mkp_verify(&taus, open.max_p_weight as usize)?;
    for r in out.iter_mut() {
        r.check = relabel(&r.check, levels);
    }
    Ok(out)
}

fn relabel(check: &str, levels: &[i64]) -> String {
    if let Some(i) = check.strip_prefix("fay[").and_then(|s| s.strip_suffix(']')) {
        let i: usize = i.parse().expect("index");
        return format!("mkp/fay:N={}", levels[i]);
    }
    if let Some(pair) = check.strip_prefix("bd[").and_then(|s| s.strip_suffix(']')) {
        let (a, b) = pair.split_once("->").expect("pair");
        let (a, b): (usize, usize) = (a.parse().expect("index"), b.parse().expect("index"));
        return format!("mkp/bd:N={}->{}", levels[a], levels[b]);
    }
    check.to_string()
}

/// The explicit transformation between levels 0 and 1 against the direct
/// computation, and against the detected transformation.
pub fn suite_bd_explicit(open: TruncationProfile) -> Result<Vec<CheckReport>> {
    let via_d = open_tau1_via_d(open)?;
    let direct = open_tau(1, open)?;
    let (_, detected) = explicit_bd_check(open)?;
    Ok(vec![equality("bd-explicit/tau1-via-D", &via_d, &direct)?, detected])
}

/// Open-side identities: level-zero collapse and the `beta2` flow.
pub fn suite_open(open: TruncationProfile, levels: &[i64]) -> Result<Vec<CheckReport>> {
    let mut out = vec![equality("open/level-zero", &open_tau(0, open)?, &closed_tau_merged(open)?)?];
    for &n in levels {
        let tau = open_tau(n, open)?;
        let lhs = tau.derive_beta(BetaVar::B2);
        let rhs = cutjoin_apply(&tau).reprofile(*lhs.profile());
        out.push(equality(&format!("open/cut-and-join:N={n}"), &lhs, &rhs)?);
    }
    Ok(out)
}

/// Closed partition function: fermionic route against the cut-and-join flow.
pub fn suite_closed_routes(closed: TruncationProfile) -> Result<Vec<CheckReport>> {
    let a = closed_tau(closed, ClosedRoute::Fermionic)?;
    let b = closed_tau(closed, ClosedRoute::CutJoin)?;
    Ok(vec![equality("closed/routes", &a, &b)?])
}

/// Rows at `level` with one perturbed head row; `coeffs` are the corrections
/// to `z^{level-1}`, the tail is `z^{level-i} e^{q z}`.
pub fn perturbed_rows(level: i32, coeffs: &[Rational], profile: TruncationProfile) -> Rows {
    let mut head = vec![SymSeries::one(profile)];
    head.extend(coeffs.iter().map(|c| SymSeries::constant(c.clone(), profile)));
    let tail = Arc::new(move |i: usize, max_exp: i32| exp_row(level - i as i32, max_exp, QSlot::Q1, profile));
    Rows::new(level, profile, vec![LaurentRow::new(level - 1, head)]).with_tail(tail)
}

/// Fock-space layer: boson-fermion map, fermion relations, the two
/// `alpha_n`, the wedge reduction lemma and the fermionic cut-and-join flow.
/// `samples` are extra row perturbations for the flow check.
pub fn suite_fock(weight: u32, beta_order: u32, samples: &[Vec<Rational>]) -> Result<Vec<CheckReport>> {
    let pr = TruncationProfile::closed(weight, 0);
    let mut out = Vec::new();
    let mut schur_ok = true;
    for level in -2..=2 {
        for lambda in partitions_up_to(weight) {
            let v = WedgeState::basis(&lambda, level, weight, pr);
            let s = schur_p(&lambda, pr);
            schur_ok &= boson_fermion(&v) == s && boson_fermion_vertex(&v)? == s;
        }
    }
    out.push(CheckReport::flag("fock/boson-fermion", pr, schur_ok));

    let small = weight.min(4);
    let mut anti_ok = true;
    let mut alpha_ok = true;
    for level in -2..=2 {
        for lambda in partitions_up_to(small) {
            let s = WedgeState::basis(&lambda, level, 2 * small + 4, pr);
            for a in (level - small as i32 - 2)..(level + small as i32 + 2) {
                let x = fermion_apply(&fermion_apply(&s, Fermion::ThetaDagger, a), Fermion::Theta, a);
                let y = fermion_apply(&fermion_apply(&s, Fermion::Theta, a), Fermion::ThetaDagger, a);
                anti_ok &= x.plus(&y) == s;
                let b = a + 1;
                let ab = fermion_apply(&fermion_apply(&s, Fermion::Theta, b), Fermion::Theta, a);
                let ba = fermion_apply(&fermion_apply(&s, Fermion::Theta, a), Fermion::Theta, b);
                anti_ok &= ab == ba.neg();
                anti_ok &= fermion_apply(&fermion_apply(&s, Fermion::Theta, a), Fermion::Theta, a).is_zero();
            }
            for n in [-3, -2, -1, 1, 2, 3] {
                alpha_ok &= alpha_apply(&s, n) == alpha_apply_fermionic(&s, n);
            }
        }
    }
    out.push(CheckReport::flag("fock/anticommutation", pr, anti_ok));
    out.push(CheckReport::flag("fock/alpha-routes", pr, alpha_ok));

    let lemma_pr = TruncationProfile::closed(3, 0).with_q1(12);
    let mut lemma_ok = true;
    for k in 1..=3 {
        let tail = Arc::new(move |i: usize, max_exp: i32| exp_row(1 - i as i32, max_exp, QSlot::Q1, lemma_pr));
        let lhs = Rows::new(1, lemma_pr, vec![LaurentRow::power(-k, lemma_pr)]).with_tail(tail.clone());
        let red = wedge_reduce_exp_row(k, QSlot::Q1, 6, lemma_pr)?;
        let rhs = Rows::new(1, lemma_pr, vec![red]).with_tail(tail);
        let a = wedge_from_rows(&lhs, 3)?;
        let b = wedge_from_rows(&rhs, 3)?;
        lemma_ok &= a == b && boson_fermion(&a) == boson_fermion(&b);
    }
    out.push(CheckReport::flag("fock/wedge-reduction", lemma_pr, lemma_ok));

    let flow_pr = TruncationProfile::closed(small, beta_order).with_q1(2 * small);
    let mut flow_ok = true;
    let default = vec![Rational::new(2.into(), 3.into()), Rational::from_integer((-1).into())];
    let all: Vec<&Vec<Rational>> = std::iter::once(&default).chain(samples.iter()).collect();
    for (idx, coeffs) in all.iter().enumerate() {
        let level = [-1, 0, 2][idx % 3];
        let rows = perturbed_rows(level, coeffs, flow_pr);
        for var in [BetaVar::B1, BetaVar::B2, BetaVar::Sum] {
            let lhs = cutjoin_exp(&boson_fermion(&wedge_from_rows(&rows, small)?), var, CutJoinRoute::Schur);
            let rhs = boson_fermion(&wedge_from_rows(&cutjoin_deform_rows(&rows, var), small)?);
            flow_ok &= lhs == rhs;
        }
    }
    out.push(CheckReport::flag("fock/cut-and-join-flow", flow_pr, flow_ok));
    Ok(out)
}

/// Soliton Wronskians: Fay, the `gamma_k` chain, and a forward/backward
/// round trip.
pub fn suite_soliton(params: &SolitonParams, profile: TruncationProfile) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for k in 1..=params.len() {
        let dk = soliton_tau(params, k, profile)?;
        out.push(fay_report(&format!("soliton/fay:k={k}"), &dk)?);
        out.push(equality(&format!("soliton/gamma-chain:k={k}"), &soliton_chain_step(params, k, profile)?, &dk)?);
    }
    if !params.is_empty() {
        let a = soliton_tau(params, params.len(), profile)?;
        let c = BdSeries::new(vec![
            SymSeries::one(profile),
            SymSeries::constant(Rational::new(1.into(), 2.into()), profile),
            SymSeries::constant(Rational::new((-3).into(), 1.into()), profile),
        ])?;
        let b = bd_apply(&a, &c, Direction::Forward)?;
        let back = bd_detect(&b, &a, Direction::Backward, profile.max_p_weight as usize)?;
        out.push(CheckReport::new("soliton/round-trip", profile, back.witness));
    }
    Ok(out)
}

/// `tau_{H^perp}(t) = tau_H(-t)` for perturbed rows and the Hurwitz rows.
pub fn suite_ortho(weight: u32) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    let pr = TruncationProfile::closed(weight, 0);
    for (level, coeffs) in [(0, vec![Rational::new(5.into(), 2.into())]), (-1, vec![Rational::new(1.into(), 3.into()), Rational::from_integer((-2).into())]), (2, vec![Rational::from_integer(0.into()), Rational::from_integer(4.into())])] {
        let mut head = vec![SymSeries::one(pr)];
        head.extend(coeffs.iter().map(|c| SymSeries::constant(c.clone(), pr)));
        let rows = Rows::new(level, pr, vec![LaurentRow::new(level - 1, head)]);
        let tau = boson_fermion(&wedge_from_rows(&rows, weight)?);
        let dual = boson_fermion(&wedge_from_rows(&ortho_rows(&rows)?, weight)?);
        out.push(equality(&format!("ortho/perturbed:N={level}"), &dual, &adjoint_tau(&tau))?);
    }
    let hpr = TruncationProfile::closed(2, 1);
    let rows = closed_rows(hpr);
    let tau = boson_fermion(&wedge_from_rows(&rows, 2)?);
    let dual = boson_fermion(&wedge_from_rows(&ortho_rows(&rows)?, 2)?);
    out.push(equality("ortho/hurwitz-rows", &dual, &adjoint_tau(&tau))?);
    Ok(out)
}

/// Oracle comparison for every `|lambda| <= weight`, `m <= max_m`.
pub fn closed_oracle_table(weight: u32, max_m: u32) -> Result<Vec<(Partition, u32, Rational, Rational)>> {
    let pr = TruncationProfile::closed(weight, max_m);
    let h = crate::hurwitz::closed_free_energy(pr)?;
    let mut out = Vec::new();
    for lambda in partitions_up_to(weight).into_iter().skip(1) {
        for m in 0..=max_m {
            let d = lambda.weight();
            let c = h
                .get(&crate::series::Key::new(lambda.clone(), d, 0))
                .map(|b| b.coeff(m, 0))
                .unwrap_or_default()
                * Rational::from_integer(crate::series::factorial(m));
            let o = closed_hurwitz_oracle(&lambda, m)?;
            out.push((lambda.clone(), m, c, o));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pass(r: &[CheckReport]) -> bool {
        r.iter().all(|c| c.passed())
    }

    #[test]
    fn small_suites_pass() {
        let closed = TruncationProfile::closed(3, 1);
        let open = TruncationProfile::open(2, 2, 1);
        assert!(all_pass(&suite_kp(closed).unwrap()));
        assert!(all_pass(&suite_closed_routes(closed).unwrap()));
        assert!(all_pass(&suite_mkp(open, &[-1, 0, 1]).unwrap()));
        assert!(all_pass(&suite_bd_explicit(open).unwrap()));
        assert!(all_pass(&suite_open(open, &[-1, 0, 1]).unwrap()));
        assert!(all_pass(&suite_fock(3, 1, &[]).unwrap()));
        assert!(all_pass(&suite_ortho(3).unwrap()));
    }

    #[test]
    fn soliton_suite_passes() {
        let r = |n: i64| Rational::from_integer(n.into());
        let params = SolitonParams::new(vec![r(1), r(2)], vec![r(-1), r(3)], vec![r(1), r(2)]).unwrap();
        let rep = suite_soliton(&params, TruncationProfile::closed(3, 0)).unwrap();
        assert!(all_pass(&rep), "{rep:?}");
    }

    #[test]
    fn oracle_table_matches() {
        assert!(closed_oracle_table(3, 3).unwrap().iter().all(|(_, _, a, b)| a == b));
    }
}
