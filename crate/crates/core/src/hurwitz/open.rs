use serde::{Deserialize, Serialize};

use super::closed::{closed_tau, ClosedRoute};
use crate::error::{Error, Result};
use crate::series::{factorial, int, shift_q2, BetaScalar, BetaVar, Key, Rational, SymSeries, TruncationProfile};
use crate::symfun::{cutjoin_exp, CutJoinRoute, Partition};

/// `h^o_N(lambda, m1, m2, d1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenHurwitzQuery {
    pub lambda: Partition,
    pub m1: u32,
    pub m2: u32,
    pub d1: u32,
    pub n: i64,
}

/// Working profile for open computations: the closed series must be known
/// up to weight `max(weight, q1_max)` because the `q2` shift trades weight
/// for `q1` degree.
pub fn inner_profile(profile: &TruncationProfile) -> TruncationProfile {
    let w = profile.max_p_weight.max(profile.max_q1);
    let wi = w as i32;
    TruncationProfile {
        max_p_weight: w,
        max_q1: profile.max_q1,
        max_q2: profile.max_q2.max(wi),
        min_q2: profile.min_q2.min(-wi),
        beta_order: profile.beta_order,
        x_low: profile.x_low.min(-(wi + 2)),
        x_high: profile.x_high.max(wi + 2),
    }
}

fn closed_in_q1q2(inner: TruncationProfile) -> Result<SymSeries> {
    Ok(closed_tau(inner, ClosedRoute::CutJoin)?.q1_to_q1q2())
}

/// `tau^c(p, beta1 + beta2, q1 q2)`.
pub fn closed_tau_merged(profile: TruncationProfile) -> Result<SymSeries> {
    let inner = inner_profile(&profile);
    closed_in_q1q2(inner)?.beta1_to_sum().restrict(profile)
}

/// `H^c(p, beta1 + beta2, q1 q2)`.
pub fn closed_free_energy_merged(profile: TruncationProfile) -> Result<SymSeries> {
    closed_tau_merged(profile)?.log()
}

/// `exp(N sum_n p_n q2^n / n)`.
pub fn open_disk_factor(n: i64, profile: TruncationProfile) -> Result<SymSeries> {
    let mut xi = SymSeries::zero(profile);
    for k in 1..=profile.max_p_weight {
        let c = BetaScalar::constant(Rational::new(n.into(), (k as i64).into()), profile.beta_order);
        xi.add_term(Key::new(Partition::row(k), 0, k as i32), c);
    }
    xi.exp()
}

fn assert_cancellation(s: &SymSeries) -> Result<()> {
    match s.min_q2() {
        Some(e) if e < 0 => Err(Error::CancellationFailed(format!("q2 exponent {e}"))),
        _ => Ok(()),
    }
}

/// `tau^o_N` at `beta2 = 0`:
/// `tau^c(p - N[q2^{-1}], beta1, q1 q2) exp(N sum p_n q2^n / n)`.
pub fn open_tau_base(n: i64, profile: TruncationProfile) -> Result<SymSeries> {
    profile.validate()?;
    let inner = inner_profile(&profile);
    let shifted = shift_q2(&closed_in_q1q2(inner)?, &int(-n))?;
    let base = shifted.checked_mul(&open_disk_factor(n, inner)?)?;
    assert_cancellation(&base)?;
    base.restrict(profile)
}

/// `tau^o_N = exp(beta2 A) tau^o_N|_{beta2=0}`.
pub fn open_tau(n: i64, profile: TruncationProfile) -> Result<SymSeries> {
    let base = open_tau_base(n, profile)?;
    let tau = cutjoin_exp(&base, BetaVar::B2, CutJoinRoute::Schur);
    assert_cancellation(&tau)?;
    Ok(tau)
}

/// `tau^o_N(q2 -> e^{N beta2} q2)`.
pub fn open_tau_tilde(n: i64, profile: TruncationProfile) -> Result<SymSeries> {
    Ok(open_tau(n, profile)?.scale_q2(n))
}

/// `H^o_N = log tau^o_N - H^c(p, beta1 + beta2, q1 q2)`.
pub fn open_free_energy(n: i64, profile: TruncationProfile) -> Result<SymSeries> {
    open_tau(n, profile)?
        .log()?
        .checked_sub(&closed_free_energy_merged(profile)?)
}

/// Coefficient of `(beta1^m1/m1!)(beta2^m2/m2!) q1^d1 q2^{|lambda|} p_lambda`
/// in `H^o_N`.
pub fn open_hurwitz(query: &OpenHurwitzQuery, profile: TruncationProfile) -> Result<Rational> {
    let h = open_free_energy(query.n, profile)?;
    Ok(extract_open(&h, query))
}

/// Reads one open Hurwitz number off a precomputed `H^o_N`.
pub fn extract_open(h: &SymSeries, query: &OpenHurwitzQuery) -> Rational {
    let key = Key::new(query.lambda.clone(), query.d1, query.lambda.weight() as i32);
    let c = h.get(&key).map(|b| b.coeff(query.m1, query.m2)).unwrap_or_default();
    c * Rational::from_integer(factorial(query.m1) * factorial(query.m2))
}

/// Checks that a query fits the profile.
pub fn check_query(query: &OpenHurwitzQuery, profile: &TruncationProfile) -> Result<()> {
    let w = query.lambda.weight();
    if w == 0 && query.d1 == 0 {
        return Err(Error::InvalidArgument("(d1, |lambda|) must not be (0, 0)".into()));
    }
    if !profile.admits(w, query.d1, w as i32) || query.m1 + query.m2 > profile.beta_order {
        return Err(Error::OutOfProfile(format!(
            "h^o({}, {}, {}, {}) outside the profile",
            query.lambda, query.m1, query.m2, query.d1
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn q(lambda: &[u32], m1: u32, m2: u32, d1: u32, n: i64) -> OpenHurwitzQuery {
        OpenHurwitzQuery {
            lambda: Partition::new(lambda.to_vec()).unwrap(),
            m1,
            m2,
            d1,
            n,
        }
    }

    #[test]
    fn level_zero_is_closed() {
        let pr = TruncationProfile::open(3, 3, 2);
        assert_eq!(open_tau(0, pr).unwrap(), closed_tau_merged(pr).unwrap());
        let base = open_tau_base(0, pr).unwrap();
        assert_eq!(base, closed_tau_merged(pr).unwrap().at_beta2_zero());
    }

    #[test]
    fn base_first_order_terms() {
        let pr = TruncationProfile::open(3, 3, 2);
        for n in -2..=3 {
            let base = open_tau_base(n, pr).unwrap();
            assert_eq!(base.coeff(&Partition::row(1), 0, 1).constant_term(), int(n));
            assert_eq!(base.coeff(&Partition::empty(), 1, 0).constant_term(), int(-n));
        }
    }

    #[test]
    fn case_one_closed_form() {
        let pr = TruncationProfile::open(4, 2, 1);
        for n in -2..=3 {
            let h = open_free_energy(n, pr).unwrap();
            for k in 1..=4u32 {
                assert_eq!(extract_open(&h, &q(&[k], 0, 0, 0, n)), rat(n, k as i64));
            }
            assert_eq!(extract_open(&h, &q(&[], 0, 0, 1, n)), int(-n));
        }
    }

    #[test]
    fn beta2_flow_is_cut_and_join() {
        let pr = TruncationProfile::open(3, 3, 2);
        for n in -2..=2 {
            let tau = open_tau(n, pr).unwrap();
            let lhs = tau.derive_beta(BetaVar::B2);
            let rhs = crate::symfun::cutjoin_apply(&tau).reprofile(*lhs.profile());
            assert_eq!(lhs, rhs, "N = {n}");
        }
    }

    #[test]
    fn query_checks() {
        let pr = TruncationProfile::open(3, 3, 2);
        assert!(check_query(&q(&[], 0, 0, 0, 1), &pr).is_err());
        assert!(check_query(&q(&[4], 0, 0, 0, 1), &pr).is_err());
        assert!(check_query(&q(&[2], 1, 1, 1, 1), &pr).is_ok());
    }
}
