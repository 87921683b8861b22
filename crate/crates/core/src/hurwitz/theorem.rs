use num::BigInt;

use super::half;
use super::open::inner_profile;
use super::closed::{closed_tau, ClosedRoute};
use crate::error::{Error, Result};
use crate::series::{expand_shift, factorial, int, BetaScalar, BetaVar, LaurentX, Rational, ShiftBase, SymSeries, TruncationProfile};
use crate::symfun::complete_h;

/// Coefficient of `x^{-l}` in `D(x, beta1, beta2, q1, q2)`:
/// `(1 + sum_{k>=1} e^{beta1 (l^2+l-k^2+k)/2} (-1)^k q1^{k+l} / ((l+k)(k-1)! l!))
/// e^{beta2 (l^2-l)/2} q2^l`.
pub fn d_coefficient(l: u32, profile: TruncationProfile) -> Result<SymSeries> {
    let order = profile.beta_order;
    let li = l as i64;
    let mut inner = SymSeries::one(profile);
    let mut k = 1u32;
    while k + l <= profile.max_q1 {
        let ki = k as i64;
        let e1 = half(li * li + li - ki * ki + ki)?;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let den = BigInt::from(li + ki) * factorial(k - 1) * factorial(l);
        let c = BetaScalar::exp_of(BetaVar::B1, e1, order).scale(&Rational::new(BigInt::from(sign), den));
        inner.add_term(crate::series::Key::scalar(k + l, 0), c);
        k += 1;
    }
    let e2 = half(li * li - li)?;
    let q2l = SymSeries::scalar(BetaScalar::exp_of(BetaVar::B2, e2, order), 0, l as i32, profile);
    inner.checked_mul(&q2l)
}

/// `D(x) = sum_l d_l x^{-l}` for `l <= max_q2`.
pub fn d_series(profile: TruncationProfile) -> Result<LaurentX> {
    if profile.x_low > -profile.max_q2 {
        return Err(Error::WindowExhausted {
            var: "x",
            exponent: -(profile.max_q2 as i64),
            low: profile.x_low as i64,
            high: profile.x_high as i64,
        });
    }
    let mut out = LaurentX::zero(profile);
    for l in 0..=profile.max_q2 {
        out.add_at(-l, &d_coefficient(l as u32, profile)?)?;
    }
    Ok(out)
}

/// `Coef_{x^0} [D(x) tau^c(p - [x^{-1}], beta1 + beta2, e^{-beta2} q1 q2) e^{xi(t, x)}]`.
pub fn open_tau1_via_d(profile: TruncationProfile) -> Result<SymSeries> {
    profile.validate()?;
    let inner = inner_profile(&profile);
    let closed = closed_tau(inner, ClosedRoute::CutJoin)?
        .q1_to_q1q2()
        .beta1_to_sum()
        .scale_q1(0, -1);
    let shifted = expand_shift(&closed, ShiftBase::X, &int(-1))?;
    let d = d_series(inner)?;
    let mut out = SymSeries::zero(inner);
    for (dl_exp, dl) in d.terms() {
        for (r_exp, tr) in shifted.terms() {
            let n = -(dl_exp + r_exp);
            if n < 0 || n as u32 > inner.max_p_weight {
                continue;
            }
            let prod = dl.checked_mul(tr)?.checked_mul(&complete_h(n, 1, inner))?;
            out = out.checked_add(&prod)?;
        }
    }
    out.restrict(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::open::{open_tau, open_tau_base};
    use crate::series::rat;

    #[test]
    fn d_at_l_zero() {
        let pr = TruncationProfile::open(2, 2, 2);
        let d0 = d_coefficient(0, pr).unwrap();
        let mut expected = SymSeries::one(pr);
        expected.add_term(crate::series::Key::scalar(1, 0), BetaScalar::constant(rat(-1, 1), 2));
        expected.add_term(
            crate::series::Key::scalar(2, 0),
            BetaScalar::exp_of(BetaVar::B1, -1, 2).scale(&rat(1, 2)),
        );
        assert_eq!(d0, expected);
    }

    #[test]
    fn explicit_transformation_matches_lemma_route() {
        let pr = TruncationProfile::open(3, 3, 2);
        assert_eq!(open_tau1_via_d(pr).unwrap(), open_tau(1, pr).unwrap());
    }

    #[test]
    fn beta_zero_slice() {
        let pr = TruncationProfile::open(3, 0, 0);
        assert_eq!(open_tau1_via_d(pr).unwrap(), open_tau_base(1, pr).unwrap());
    }

    #[test]
    fn window_must_cover_q2() {
        let pr = TruncationProfile::open(3, 3, 1).with_x_window(-2, 5);
        assert!(d_series(pr).is_err());
    }
}
