use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::beta::{BetaScalar, BetaVar};
use super::{int, Rational, TruncationProfile};
use crate::error::{Error, Result};
use crate::symfun::Partition;

/// Monomial `p_lambda * q1^q1 * q2^q2`. Ordered by `lambda` (weight, then
/// reverse lexicographic), then `q1`, then `q2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Key {
    pub lambda: Partition,
    pub q1: u32,
    pub q2: i32,
}

impl Key {
    pub fn new(lambda: Partition, q1: u32, q2: i32) -> Self {
        Key { lambda, q1, q2 }
    }

    pub fn scalar(q1: u32, q2: i32) -> Self {
        Key::new(Partition::empty(), q1, q2)
    }

    pub fn constant() -> Self {
        Key::scalar(0, 0)
    }
}

/// Truncated series in power sums with `q1`, `q2` gradings and
/// [`BetaScalar`] coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct SymSeries {
    profile: TruncationProfile,
    terms: BTreeMap<Key, BetaScalar>,
}

impl SymSeries {
    pub fn zero(profile: TruncationProfile) -> Self {
        SymSeries {
            profile,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(profile: TruncationProfile) -> Self {
        Self::constant(Rational::one(), profile)
    }

    pub fn constant(c: Rational, profile: TruncationProfile) -> Self {
        Self::monomial(Partition::empty(), 0, 0, BetaScalar::constant(c, profile.beta_order), profile)
    }

    /// A p-free element `c * q1^q1 * q2^q2`.
    pub fn scalar(c: BetaScalar, q1: u32, q2: i32, profile: TruncationProfile) -> Self {
        Self::monomial(Partition::empty(), q1, q2, c, profile)
    }

    pub fn monomial(lambda: Partition, q1: u32, q2: i32, c: BetaScalar, profile: TruncationProfile) -> Self {
        let mut s = Self::zero(profile);
        s.add_term(Key::new(lambda, q1, q2), c);
        s
    }

    /// The power sum `p_n`.
    pub fn p(n: u32, profile: TruncationProfile) -> Self {
        Self::monomial(Partition::row(n), 0, 0, BetaScalar::one(profile.beta_order), profile)
    }

    pub fn profile(&self) -> &TruncationProfile {
        &self.profile
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &BetaScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Key::constant()).is_some_and(|c| c.is_one())
    }

    pub fn get(&self, key: &Key) -> Option<&BetaScalar> {
        self.terms.get(key)
    }

    pub fn coeff(&self, lambda: &Partition, q1: u32, q2: i32) -> BetaScalar {
        self.terms
            .get(&Key::new(lambda.clone(), q1, q2))
            .cloned()
            .unwrap_or_else(|| BetaScalar::zero(self.profile.beta_order))
    }

    /// Adds `c * key`, dropping it if the key lies outside the profile.
    pub fn add_term(&mut self, key: Key, c: BetaScalar) {
        if !self.profile.admits(key.lambda.weight(), key.q1, key.q2) {
            return;
        }
        let c = c.truncate(self.profile.beta_order);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.embed(self.profile.beta_order));
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c).embed(self.profile.beta_order);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn same_profile(&self, other: &SymSeries) -> Result<()> {
        if self.profile == other.profile {
            Ok(())
        } else {
            Err(Error::ProfileMismatch)
        }
    }

    pub fn checked_add(&self, other: &SymSeries) -> Result<SymSeries> {
        self.same_profile(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SymSeries) -> Result<SymSeries> {
        self.checked_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> SymSeries {
        SymSeries {
            profile: self.profile,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> SymSeries {
        if r.is_zero() {
            return SymSeries::zero(self.profile);
        }
        SymSeries {
            profile: self.profile,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.scale(r))).collect(),
        }
    }

    pub fn scale_beta(&self, b: &BetaScalar) -> SymSeries {
        let mut out = SymSeries::zero(self.profile);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.mul(b));
        }
        out
    }

    /// Truncated product.
    pub fn checked_mul(&self, other: &SymSeries) -> Result<SymSeries> {
        self.same_profile(other)?;
        let mut out = SymSeries::zero(self.profile);
        for (ka, ca) in &self.terms {
            let wa = ka.lambda.weight();
            for (kb, cb) in &other.terms {
                let q1 = ka.q1 + kb.q1;
                let q2 = ka.q2 + kb.q2;
                if !self.profile.admits(wa + kb.lambda.weight(), q1, q2) {
                    continue;
                }
                let c = ca.mul(cb);
                if !c.is_zero() {
                    out.add_term(Key::new(ka.lambda.union(&kb.lambda), q1, q2), c);
                }
            }
        }
        Ok(out)
    }

    /// Loop bound for nilpotent power series in this profile.
    fn nilpotency_bound(&self) -> u32 {
        let p = &self.profile;
        p.max_p_weight + p.max_q1 + p.beta_order + (p.max_q2 - p.min_q2) as u32 + 2
    }

    /// `exp(s)`. The constant coefficient must have zero rational part so
    /// that the series terminates inside the profile.
    pub fn exp(&self) -> Result<SymSeries> {
        if let Some(c) = self.terms.get(&Key::constant()) {
            if !c.constant_term().is_zero() {
                return Err(Error::NonTerminating);
            }
        }
        let mut out = SymSeries::one(self.profile);
        let mut term = SymSeries::one(self.profile);
        for k in 1..=self.nilpotency_bound() {
            term = term.checked_mul(self)?.scale(&int(k as i64).recip());
            if term.is_zero() {
                return Ok(out);
            }
            out = out.checked_add(&term)?;
        }
        Err(Error::NonTerminating)
    }

    /// `log(s)` for `s` whose constant coefficient has rational part 1.
    pub fn log(&self) -> Result<SymSeries> {
        let c = self.coeff(&Partition::empty(), 0, 0);
        if c.constant_term() != Rational::one() {
            return Err(Error::LogDomain);
        }
        let nil = self.checked_sub(&SymSeries::one(self.profile))?;
        let mut out = SymSeries::zero(self.profile);
        let mut power = SymSeries::one(self.profile);
        for k in 1..=self.nilpotency_bound() {
            power = power.checked_mul(&nil)?;
            if power.is_zero() {
                return Ok(out);
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.checked_add(&power.scale(&int(sign * k as i64).recip()))?;
        }
        Err(Error::NonTerminating)
    }

    /// Rational part of the constant coefficient.
    pub fn constant_rational(&self) -> Rational {
        self.coeff(&Partition::empty(), 0, 0).constant_term()
    }

    /// Multiplicative inverse of a unit (nonzero rational constant).
    pub fn inverse(&self) -> Result<SymSeries> {
        let c0 = self.constant_rational();
        if c0.is_zero() {
            return Err(Error::NonUnit);
        }
        let inv0 = c0.recip();
        let normalized = self.scale(&inv0);
        let neg_nil = SymSeries::one(self.profile).checked_sub(&normalized)?;
        let mut out = SymSeries::one(self.profile);
        let mut power = SymSeries::one(self.profile);
        for _ in 1..=self.nilpotency_bound() {
            power = power.checked_mul(&neg_nil)?;
            if power.is_zero() {
                return Ok(out.scale(&inv0));
            }
            out = out.checked_add(&power)?;
        }
        Err(Error::NonTerminating)
    }

    pub fn checked_div(&self, unit: &SymSeries) -> Result<SymSeries> {
        self.checked_mul(&unit.inverse()?)
    }

    /// `d/dp_n`.
    pub fn derive_p(&self, n: u32) -> SymSeries {
        let mut out = SymSeries::zero(self.profile);
        for (k, c) in &self.terms {
            let mult = k.lambda.parts().iter().filter(|&&p| p == n).count() as i64;
            if mult == 0 {
                continue;
            }
            let lambda = k.lambda.remove_part(n).expect("part present");
            out.add_term(Key::new(lambda, k.q1, k.q2), c.scale(&int(mult)));
        }
        out
    }

    /// `d/dt_n = n d/dp_n` under `p_n = n t_n`.
    pub fn derive_t(&self, n: u32) -> SymSeries {
        self.derive_p(n).scale(&int(n as i64))
    }

    /// Derivative in a beta parameter; the result lives in a profile with
    /// `beta_order - 1`.
    pub fn derive_beta(&self, var: BetaVar) -> SymSeries {
        let mut profile = self.profile;
        profile.beta_order = profile.beta_order.saturating_sub(1);
        let mut out = SymSeries::zero(profile);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.derive(var));
        }
        out
    }

    /// `q2 -> exp(n*beta2) q2`.
    pub fn scale_q2(&self, n: i64) -> SymSeries {
        if n == 0 {
            return self.clone();
        }
        let order = self.profile.beta_order;
        let mut out = SymSeries::zero(self.profile);
        for (k, c) in &self.terms {
            let e = BetaScalar::exp_of(BetaVar::B2, n * k.q2 as i64, order);
            out.add_term(k.clone(), c.mul(&e));
        }
        out
    }

    /// `q1 -> exp(c1*beta1 + c2*beta2) q1`.
    pub fn scale_q1(&self, c1: i64, c2: i64) -> SymSeries {
        let order = self.profile.beta_order;
        let mut out = SymSeries::zero(self.profile);
        for (k, c) in &self.terms {
            let e = k.q1 as i64;
            let f = BetaScalar::exp_linear(&int(c1 * e), &int(c2 * e), order);
            out.add_term(k.clone(), c.mul(&f));
        }
        out
    }

    /// `q1 -> q1*q2`.
    pub fn q1_to_q1q2(&self) -> SymSeries {
        let mut out = SymSeries::zero(self.profile);
        for (k, c) in &self.terms {
            out.add_term(Key::new(k.lambda.clone(), k.q1, k.q2 + k.q1 as i32), c.clone());
        }
        out
    }

    /// `beta1 -> beta1 + beta2` on every coefficient.
    pub fn beta1_to_sum(&self) -> SymSeries {
        self.map_beta(|c| c.beta1_to_sum())
    }

    pub fn at_beta2_zero(&self) -> SymSeries {
        self.map_beta(|c| c.at_beta2_zero())
    }

    pub fn map_beta(&self, f: impl Fn(&BetaScalar) -> BetaScalar) -> SymSeries {
        let mut out = SymSeries::zero(self.profile);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    pub fn filter(&self, keep: impl Fn(&Key) -> bool) -> SymSeries {
        SymSeries {
            profile: self.profile,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Shrinks to a smaller profile, dropping terms outside it.
    pub fn restrict(&self, profile: TruncationProfile) -> Result<SymSeries> {
        if !profile.is_within(&self.profile) {
            return Err(Error::ProfileWiden("restrict"));
        }
        let mut out = SymSeries::zero(profile);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    /// Re-embeds into a larger profile. Nothing is invented: the result is
    /// only exact up to the old bounds.
    pub fn embed(&self, profile: TruncationProfile) -> Result<SymSeries> {
        if !self.profile.is_within(&profile) {
            return Err(Error::ProfileWiden("embed target must contain source"));
        }
        let mut out = SymSeries::zero(profile);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    /// Moves to another profile without checks (used for the scalar parts of
    /// mixed computations where exactness has been argued by the caller).
    pub fn reprofile(&self, profile: TruncationProfile) -> SymSeries {
        let mut out = SymSeries::zero(profile);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    /// The p-free part, as a scalar series.
    pub fn p_free_part(&self) -> SymSeries {
        self.filter(|k| k.lambda.is_empty())
    }

    /// Coefficient of `p_lambda` as a scalar series in `q1`, `q2`, `beta`.
    pub fn coeff_of_p(&self, lambda: &Partition) -> SymSeries {
        let mut out = SymSeries::zero(self.profile);
        for (k, c) in self.terms.iter().filter(|(k, _)| &k.lambda == lambda) {
            out.add_term(Key::scalar(k.q1, k.q2), c.clone());
        }
        out
    }

    /// Multiplies a scalar series by `p_lambda`.
    pub fn times_p(&self, lambda: &Partition) -> SymSeries {
        let mut out = SymSeries::zero(self.profile);
        for (k, c) in &self.terms {
            out.add_term(Key::new(k.lambda.union(lambda), k.q1, k.q2), c.clone());
        }
        out
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|k| k.lambda.is_empty())
    }

    /// `tau(t) -> tau(-t)`: `p_lambda` picks up `(-1)^{l(lambda)}`.
    pub fn negate_times(&self) -> SymSeries {
        SymSeries {
            profile: self.profile,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let c = if k.lambda.len() % 2 == 1 { c.neg() } else { c.clone() };
                    (k.clone(), c)
                })
                .collect(),
        }
    }

    /// Restriction to the t1-line (`p_n = 0` for `n >= 2`).
    pub fn on_t1_line(&self) -> SymSeries {
        self.filter(|k| k.lambda.is_column())
    }

    pub fn min_q2(&self) -> Option<i32> {
        self.terms.keys().map(|k| k.q2).min()
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.lambda.weight()).max()
    }
}

impl fmt::Debug for SymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let single = c.terms().count() == 1 && c.terms().all(|(_, r)| !r.is_negative());
            if single {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})")?;
            }
            for &p in k.lambda.parts() {
                write!(f, "*p{p}")?;
            }
            if k.q1 != 0 {
                write!(f, "*q1^{}", k.q1)?;
            }
            if k.q2 != 0 {
                write!(f, "*q2^{}", k.q2)?;
            }
        }
        Ok(())
    }
}

impl Add for &SymSeries {
    type Output = SymSeries;
    fn add(self, rhs: &SymSeries) -> SymSeries {
        self.checked_add(rhs).expect("profile mismatch in series addition")
    }
}

impl Sub for &SymSeries {
    type Output = SymSeries;
    fn sub(self, rhs: &SymSeries) -> SymSeries {
        self.checked_sub(rhs).expect("profile mismatch in series subtraction")
    }
}

impl Mul for &SymSeries {
    type Output = SymSeries;
    fn mul(self, rhs: &SymSeries) -> SymSeries {
        self.checked_mul(rhs).expect("profile mismatch in series product")
    }
}

impl Neg for &SymSeries {
    type Output = SymSeries;
    fn neg(self) -> SymSeries {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn prof(w: u32) -> TruncationProfile {
        TruncationProfile::open(w, w, 2)
    }

    fn p(n: u32, w: u32) -> SymSeries {
        SymSeries::p(n, prof(w))
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let pr = prof(2);
        let x = SymSeries::monomial(part(&[1]), 0, 1, BetaScalar::one(2), pr);
        let a = &SymSeries::one(pr) + &x;
        let b = &SymSeries::one(pr) - &x;
        let expected = &SymSeries::one(pr) - &SymSeries::monomial(part(&[1, 1]), 0, 2, BetaScalar::one(2), pr);
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn monomial_merge() {
        let prod = &p(2, 3) * &p(1, 3);
        assert_eq!(prod.len(), 1);
        assert!(prod.coeff(&part(&[2, 1]), 0, 0).is_one());
    }

    #[test]
    fn square_of_truncated_exponential() {
        // (sum_{n<=3} p1^n/n!)^2 = sum_{n<=3} 2^n p1^n / n! at weight 3.
        let pr = prof(3);
        let e = p(1, 3).exp().unwrap();
        let sq = &e * &e;
        let expected = p(1, 3).scale(&rat(2, 1)).exp().unwrap();
        assert_eq!(sq, expected);
        assert_eq!(sq.coeff(&part(&[1, 1, 1]), 0, 0).constant_term(), rat(8, 6));
        let _ = pr;
    }

    #[test]
    fn exp_of_zero_and_q_p1() {
        let pr = TruncationProfile::closed(3, 1);
        assert!(SymSeries::zero(pr).exp().unwrap().is_one());
        let qp1 = SymSeries::monomial(part(&[1]), 1, 0, BetaScalar::one(1), pr);
        let e = qp1.exp().unwrap();
        assert_eq!(e.len(), 4);
        assert_eq!(e.coeff(&part(&[1, 1, 1]), 3, 0).constant_term(), rat(1, 6));
        assert_eq!(e.coeff(&part(&[1, 1]), 2, 0).constant_term(), rat(1, 2));
    }

    #[test]
    fn log_of_truncated_exp() {
        let pr = prof(2);
        let s = &(&SymSeries::one(pr) + &p(1, 2)) + &SymSeries::monomial(part(&[1, 1]), 0, 0, BetaScalar::constant(rat(1, 2), 2), pr);
        assert_eq!(s.log().unwrap(), p(1, 2));
        assert_eq!(p(1, 2).log(), Err(Error::LogDomain));
    }

    #[test]
    fn exp_rejects_rational_constant() {
        assert_eq!(SymSeries::one(prof(2)).exp(), Err(Error::NonTerminating));
    }

    #[test]
    fn derivatives() {
        let p1sq = &p(1, 3) * &p(1, 3);
        assert_eq!(p1sq.derive_p(1), p(1, 3).scale(&rat(2, 1)));
        assert_eq!(p(2, 3).derive_t(2), SymSeries::constant(rat(2, 1), prof(3)));
        let pr = prof(3);
        let s = SymSeries::monomial(part(&[1]), 0, 0, BetaScalar::monomial(0, 2, rat(1, 1), 2), pr);
        let d = s.derive_beta(BetaVar::B2);
        assert_eq!(d.coeff(&part(&[1]), 0, 0).coeff(0, 1), rat(2, 1));
    }

    #[test]
    fn scale_q2_cases() {
        let pr = prof(3);
        let s = SymSeries::monomial(part(&[1]), 0, 1, BetaScalar::one(2), pr);
        let scaled = s.scale_q2(1);
        let c = scaled.coeff(&part(&[1]), 0, 1);
        assert_eq!(c.coeff(0, 1), rat(1, 1));
        assert_eq!(c.coeff(0, 2), rat(1, 2));
        assert_eq!(s.scale_q2(0), s);
        let q2sq = SymSeries::scalar(BetaScalar::one(2), 0, 2, pr);
        let c = q2sq.scale_q2(2).coeff(&Partition::empty(), 0, 2);
        assert_eq!(c, BetaScalar::exp_of(BetaVar::B2, 4, 2));
    }

    #[test]
    fn inverse_of_unit() {
        let pr = prof(3);
        let u = &SymSeries::one(pr) + &p(1, 3);
        let inv = u.inverse().unwrap();
        assert!((&u * &inv).is_one());
        assert_eq!(p(1, 3).inverse(), Err(Error::NonUnit));
    }

    #[test]
    fn restrict_and_embed() {
        let big = prof(4);
        let small = prof(2);
        let s = (&p(1, 4) * &p(3, 4)).checked_add(&p(2, 4)).unwrap();
        let r = s.restrict(small).unwrap();
        assert_eq!(r, p(2, 2));
        assert!(r.restrict(big).is_err());
        assert_eq!(r.embed(big).unwrap(), p(2, 4));
    }

    #[test]
    fn profile_mismatch_is_an_error() {
        assert_eq!(p(1, 2).checked_mul(&p(1, 3)), Err(Error::ProfileMismatch));
    }
}
