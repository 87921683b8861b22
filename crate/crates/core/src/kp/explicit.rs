use super::detect::{bd_detect, Detection};
use super::report::{CheckReport, Witness};
use super::tau::Direction;
use crate::error::Result;
use crate::hurwitz::{d_coefficient, open_tau_tilde};
use crate::series::{SymSeries, TruncationProfile};

/// Detects the transformation between the rescaled open partition functions
/// at levels 0 and 1, and compares it with `D(x, beta1, beta2, q1, e^{beta2} q2)`
/// divided by the p-free part of the level-1 function.
pub fn explicit_bd_check(profile: TruncationProfile) -> Result<(Detection, CheckReport)> {
    let t0 = open_tau_tilde(0, profile)?;
    let t1 = open_tau_tilde(1, profile)?;
    let depth = profile.max_p_weight as usize;
    let det = bd_detect(&t0, &t1, Direction::Forward, depth)?;
    let kappa = t1.p_free_part();
    let mut witness = det.witness.clone();
    if witness.is_none() {
        for (l, c) in det.c.coeffs.iter().enumerate() {
            let d = d_coefficient(l as u32, profile)?.scale_q2(1).checked_div(&kappa)?;
            let diff = c.checked_sub(&d)?;
            let found = diff.terms().next().map(|(k, v)| Witness::new(k, v, vec![-(l as i32)]));
            if found.is_some() {
                witness = found;
                break;
            }
        }
    }
    Ok((det, CheckReport::new("bd-explicit", profile, witness)))
}

/// Coefficient of `x^{-l}` of the detected transformation, rescaled back by
/// the p-free part.
pub fn unnormalized_coefficient(det: &Detection, l: usize, kappa: &SymSeries) -> Result<SymSeries> {
    det.c.coeffs[l].checked_mul(kappa)
}
