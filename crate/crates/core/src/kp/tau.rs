use std::fmt;
use std::ops::Deref;

use num::Zero;

use crate::error::{Error, Result};
use crate::series::{expand_shift, int, LaurentX, ShiftBase, SymSeries, TruncationProfile};
use crate::symfun::complete_h;

/// Sign of a shift or exponential.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Direction of a Backlund-Darboux transformation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `Coef_{x^0}(C(x) tau(t - [x^{-1}]) e^{xi})`.
    Forward,
    /// `Coef_{x^0}(C(x) tau(t + [x^{-1}]) e^{-xi})`.
    Backward,
}

/// A tau-function candidate: a series whose constant term is a unit.
/// Times are `t_n = p_n / n`.
#[derive(Clone, PartialEq, Eq)]
pub struct TauSeries(SymSeries);

impl TauSeries {
    pub fn new(s: SymSeries) -> Result<Self> {
        if s.constant_rational().is_zero() {
            return Err(Error::NonUnit);
        }
        Ok(TauSeries(s))
    }

    pub fn series(&self) -> &SymSeries {
        &self.0
    }

    pub fn into_series(self) -> SymSeries {
        self.0
    }

    /// Divides by the p-free part so that `tau(0) = 1`.
    pub fn normalized(&self) -> Result<TauSeries> {
        Ok(TauSeries(self.0.checked_div(&self.0.p_free_part())?))
    }
}

impl Deref for TauSeries {
    type Target = SymSeries;
    fn deref(&self) -> &SymSeries {
        &self.0
    }
}

impl fmt::Debug for TauSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TauSeries({})", self.0)
    }
}

/// `C(x) = sum_i c_i x^{-i}` with p-free coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BdSeries {
    pub coeffs: Vec<SymSeries>,
}

impl BdSeries {
    pub fn new(coeffs: Vec<SymSeries>) -> Result<Self> {
        let c = BdSeries { coeffs };
        c.check_unit()?;
        Ok(c)
    }

    pub fn one(profile: TruncationProfile) -> Self {
        BdSeries {
            coeffs: vec![SymSeries::one(profile)],
        }
    }

    pub fn c(&self, i: usize) -> Option<&SymSeries> {
        self.coeffs.get(i)
    }

    pub fn depth(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn check_unit(&self) -> Result<()> {
        match self.coeffs.first() {
            Some(c) if !c.constant_rational().is_zero() => Ok(()),
            _ => Err(Error::NonUnit),
        }
    }

    pub fn map(&self, f: impl Fn(&SymSeries) -> SymSeries) -> BdSeries {
        BdSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

/// `exp(sign * xi(t, x))` with `xi = sum_n p_n x^n / n`.
pub fn exp_xi(sign: Sign, profile: TruncationProfile) -> Result<LaurentX> {
    let mut out = LaurentX::zero(profile);
    for k in 0..=profile.max_p_weight as i32 {
        out.add_at(k, &complete_h(k, sign.as_i32(), profile))?;
    }
    Ok(out)
}

/// `tau(t - [x^{-1}])` for `Minus`, `tau(t + [x^{-1}])` for `Plus`.
pub fn tau_shift(tau: &SymSeries, sign: Sign) -> Result<LaurentX> {
    expand_shift(tau, ShiftBase::X, &int(sign.as_i32() as i64))
}

/// `Coef_{x^t}(C(x) tau(t -+ [x^{-1}]) e^{+-xi})`.
pub fn bd_coef(tau: &SymSeries, c: &BdSeries, direction: Direction, t: i32) -> Result<SymSeries> {
    let profile = *tau.profile();
    let (shift, xi) = match direction {
        Direction::Forward => (Sign::Minus, 1),
        Direction::Backward => (Sign::Plus, -1),
    };
    let shifted = tau_shift(tau, shift)?;
    let mut out = SymSeries::zero(profile);
    for (i, ci) in c.coeffs.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        for (e, te) in shifted.terms() {
            let n = t + i as i32 - e;
            if n < 0 || n as u32 > profile.max_p_weight {
                continue;
            }
            let prod = ci.checked_mul(te)?.checked_mul(&complete_h(n, xi, profile))?;
            out = out.checked_add(&prod)?;
        }
    }
    Ok(out)
}

/// Forward or backward Backlund-Darboux transformation.
pub fn bd_apply(tau: &SymSeries, c: &BdSeries, direction: Direction) -> Result<SymSeries> {
    c.check_unit()?;
    bd_coef(tau, c, direction, 0)
}

/// Wave function `x^N tau(t-[x^{-1}]) e^{xi} / tau` or adjoint
/// `x^{-N} tau(t+[x^{-1}]) e^{-xi} / tau`.
pub fn wave(tau: &SymSeries, level: i32, kind: WaveKind) -> Result<LaurentX> {
    let profile = *tau.profile();
    let inv = tau.inverse()?;
    let (sign, xi, shift) = match kind {
        WaveKind::Wave => (Sign::Minus, Sign::Plus, level),
        WaveKind::Adjoint => (Sign::Plus, Sign::Minus, -level),
    };
    let shifted = tau_shift(tau, sign)?.mul_sym(&inv)?;
    let e = exp_xi(xi, profile)?;
    let mut out = LaurentX::zero(profile);
    for (a, sa) in shifted.terms() {
        for (b, sb) in e.terms() {
            let prod = sa.checked_mul(sb)?;
            if !prod.is_zero() {
                out.add_at(a + b + shift, &prod)?;
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WaveKind {
    Wave,
    Adjoint,
}

/// `tau*(t) = tau(-t)`.
pub fn adjoint_tau(tau: &SymSeries) -> SymSeries {
    tau.negate_times()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{factorial, rat, BetaScalar, Key, Rational};
    use crate::symfun::Partition;

    fn pr() -> TruncationProfile {
        TruncationProfile::closed(4, 0)
    }

    fn p1() -> SymSeries {
        SymSeries::p(1, pr())
    }

    fn one() -> SymSeries {
        SymSeries::one(pr())
    }

    #[test]
    fn exponential_coefficients() {
        let e = exp_xi(Sign::Plus, pr()).unwrap();
        assert!(e.coef(0).unwrap().is_one());
        assert_eq!(e.coef(1).unwrap(), p1());
        let h2 = (&(&p1() * &p1()) + &SymSeries::p(2, pr())).scale(&rat(1, 2));
        assert_eq!(e.coef(2).unwrap(), h2);
    }

    #[test]
    fn shifts() {
        assert_eq!(tau_shift(&one(), Sign::Minus).unwrap(), LaurentX::from_sym(&one()));
        let t = &one() + &p1();
        let s = tau_shift(&t, Sign::Minus).unwrap();
        assert_eq!(s.coef(0).unwrap(), t);
        assert_eq!(s.coef(-1).unwrap(), one().scale(&rat(-1, 1)));
        // exp(q p1) shifted: exp(q p1) * sum (-q)^k x^{-k} / k!
        let qp1 = SymSeries::monomial(Partition::row(1), 1, 0, BetaScalar::one(0), pr());
        let e = qp1.exp().unwrap();
        let s = tau_shift(&e, Sign::Minus).unwrap();
        for k in 0..=4u32 {
            let mut coef = SymSeries::zero(pr());
            let sign = if k % 2 == 0 { 1 } else { -1 };
            coef.add_term(Key::scalar(k, 0), BetaScalar::constant(rat(sign, 1) / Rational::from_integer(factorial(k)), 0));
            assert_eq!(s.coef(-(k as i32)).unwrap(), (&e * &coef), "k = {k}");
        }
    }

    #[test]
    fn wave_functions() {
        let e = exp_xi(Sign::Plus, pr()).unwrap();
        assert_eq!(wave(&one(), 0, WaveKind::Wave).unwrap(), e);
        assert_eq!(wave(&one(), 2, WaveKind::Wave).unwrap(), e.shift(2).unwrap());
        let qp1 = SymSeries::monomial(Partition::row(1), 1, 0, BetaScalar::one(0), pr());
        let w = wave(&qp1.exp().unwrap(), 0, WaveKind::Wave).unwrap();
        let mut factor = LaurentX::zero(pr());
        for k in 0..=4u32 {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let c = BetaScalar::constant(rat(sign, 1) / Rational::from_integer(factorial(k)), 0);
            factor.add_at(-(k as i32), &SymSeries::scalar(c, k, 0, pr())).unwrap();
        }
        let mut expected = LaurentX::zero(pr());
        for (a, sa) in factor.terms() {
            for (b, sb) in e.terms() {
                expected.add_at(a + b, &(sa * sb)).unwrap();
            }
        }
        assert_eq!(w, expected);
    }

    #[test]
    fn bd_examples() {
        assert!(bd_apply(&one(), &BdSeries::one(pr()), Direction::Forward).unwrap().is_one());
        let c = BdSeries::new(vec![one(), one()]).unwrap();
        assert_eq!(bd_apply(&one(), &c, Direction::Forward).unwrap(), &one() + &p1());
        // backward with C = 1 undoes it
        let back = bd_apply(&(&one() + &p1()), &BdSeries::one(pr()), Direction::Backward).unwrap();
        assert!(back.is_one());
        assert!(BdSeries::new(vec![SymSeries::zero(pr())]).is_err());
    }

    #[test]
    fn adjoint_examples() {
        assert_eq!(adjoint_tau(&(&one() + &p1())), &one() - &p1());
        let qp1 = SymSeries::monomial(Partition::row(1), 1, 0, BetaScalar::one(0), pr());
        assert_eq!(adjoint_tau(&qp1.exp().unwrap()), (-&qp1).exp().unwrap());
    }

    #[test]
    fn normalization() {
        let t = TauSeries::new((&one() + &p1()).scale(&rat(3, 1))).unwrap();
        assert_eq!(*t.normalized().unwrap(), &one() + &p1());
        assert!(TauSeries::new(p1()).is_err());
    }
}
