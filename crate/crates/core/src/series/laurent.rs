use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use super::beta::BetaScalar;
use super::sym::{Key, SymSeries};
use super::{binomial, rat_pow, Rational, TruncationProfile};
use crate::error::{Error, Result};
use crate::symfun::Partition;

/// Laurent polynomial in `x` with [`SymSeries`] coefficients, confined to
/// the x window of its profile.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentX {
    profile: TruncationProfile,
    coeffs: BTreeMap<i32, SymSeries>,
}

impl LaurentX {
    pub fn zero(profile: TruncationProfile) -> Self {
        LaurentX {
            profile,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_sym(s: &SymSeries) -> Self {
        Self::monomial(0, s.clone())
    }

    /// `s * x^n`. Panics if `n` is outside the window.
    pub fn monomial(n: i32, s: SymSeries) -> Self {
        let mut out = Self::zero(*s.profile());
        out.add_at(n, &s).expect("exponent outside the x window");
        out
    }

    pub fn profile(&self) -> &TruncationProfile {
        &self.profile
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &SymSeries)> {
        self.coeffs.iter().map(|(n, s)| (*n, s))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn window_error(&self, n: i32) -> Error {
        Error::WindowExhausted {
            var: "x",
            exponent: n as i64,
            low: self.profile.x_low as i64,
            high: self.profile.x_high as i64,
        }
    }

    /// Adds `s * x^n`; fails if a nonzero term would leave the window.
    pub fn add_at(&mut self, n: i32, s: &SymSeries) -> Result<()> {
        if s.is_zero() {
            return Ok(());
        }
        if !self.profile.admits_x(n) {
            return Err(self.window_error(n));
        }
        let sum = match self.coeffs.get(&n) {
            Some(prev) => prev.checked_add(s)?,
            None => s.reprofile(self.profile),
        };
        if sum.is_zero() {
            self.coeffs.remove(&n);
        } else {
            self.coeffs.insert(n, sum);
        }
        Ok(())
    }

    /// Coefficient of `x^n`.
    pub fn coef(&self, n: i32) -> Result<SymSeries> {
        if !self.profile.admits_x(n) {
            return Err(self.window_error(n));
        }
        Ok(self
            .coeffs
            .get(&n)
            .cloned()
            .unwrap_or_else(|| SymSeries::zero(self.profile)))
    }

    pub fn checked_add(&self, other: &LaurentX) -> Result<LaurentX> {
        let mut out = self.clone();
        for (n, s) in &other.coeffs {
            out.add_at(*n, s)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LaurentX) -> Result<LaurentX> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> LaurentX {
        self.map(|s| -s)
    }

    pub fn map(&self, f: impl Fn(&SymSeries) -> SymSeries) -> LaurentX {
        let mut out = LaurentX::zero(self.profile);
        for (n, s) in &self.coeffs {
            out.add_at(*n, &f(s)).expect("same window");
        }
        out
    }

    pub fn mul_sym(&self, s: &SymSeries) -> Result<LaurentX> {
        let mut out = LaurentX::zero(self.profile);
        for (n, c) in &self.coeffs {
            out.add_at(*n, &c.checked_mul(s)?)?;
        }
        Ok(out)
    }

    /// Product; fails if a nonzero term leaves the window.
    pub fn checked_mul(&self, other: &LaurentX) -> Result<LaurentX> {
        let mut out = LaurentX::zero(self.profile);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let prod = ca.checked_mul(cb)?;
                out.add_at(a + b, &prod)?;
            }
        }
        Ok(out)
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: i32) -> Result<LaurentX> {
        let mut out = LaurentX::zero(self.profile);
        for (n, s) in &self.coeffs {
            out.add_at(n + k, s)?;
        }
        Ok(out)
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }
}

impl fmt::Debug for LaurentX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (n, s)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{s}]*x^{n}")?;
        }
        Ok(())
    }
}

/// Where a shift of the power sums puts its compensating powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftBase {
    /// `p_n -> p_n + c x^{-n}`.
    X,
    /// `p_n -> p_n + c q2^{-n}`.
    Q2,
}

/// Substitutes `p_n -> p_n + c * base^{-n}` for every `n >= 1`.
pub fn expand_shift(s: &SymSeries, base: ShiftBase, c: &Rational) -> Result<LaurentX> {
    let profile = *s.profile();
    let mut out = LaurentX::zero(profile);
    for (key, coeff) in s.terms() {
        // Expand each block of equal parts separately, then combine.
        let mut partial: Vec<(Vec<u32>, i32, Rational)> = vec![(Vec::new(), 0, Rational::one())];
        for (&n, &m) in key.lambda.multiplicities().iter() {
            let mut next = Vec::new();
            for (parts, deg, r) in &partial {
                for j in 0..=m {
                    let f = Rational::from_integer(binomial(m, j)) * rat_pow(c, j) * r;
                    if f.is_zero() {
                        continue;
                    }
                    let mut p = parts.clone();
                    p.extend(std::iter::repeat(n).take((m - j) as usize));
                    next.push((p, deg - (n * j) as i32, f));
                }
            }
            partial = next;
        }
        for (parts, deg, r) in partial {
            let lambda = Partition::from_unsorted(parts);
            let c = coeff.scale(&r);
            let term = match base {
                ShiftBase::X => (deg, Key::new(lambda, key.q1, key.q2)),
                ShiftBase::Q2 => (0, Key::new(lambda, key.q1, key.q2 + deg)),
            };
            let mut piece = SymSeries::zero(profile);
            piece.add_term(term.1, c);
            out.add_at(term.0, &piece)?;
        }
    }
    Ok(out)
}

/// `p_n -> p_n + c q2^{-n}` as a plain series.
pub fn shift_q2(s: &SymSeries, c: &Rational) -> Result<SymSeries> {
    expand_shift(s, ShiftBase::Q2, c)?.coef(0)
}

/// Scalar `c * x^n` helper used by row builders.
pub fn x_scalar(n: i32, c: BetaScalar, profile: TruncationProfile) -> LaurentX {
    LaurentX::monomial(n, SymSeries::scalar(c, 0, 0, profile))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, rat};

    fn prof() -> TruncationProfile {
        TruncationProfile::open(4, 4, 1)
    }

    #[test]
    fn shift_of_p1_squared() {
        let pr = prof();
        let p1 = SymSeries::p(1, pr);
        let sq = &p1 * &p1;
        let l = expand_shift(&sq, ShiftBase::X, &int(-1)).unwrap();
        // (p1 - x^{-1})^2
        assert_eq!(l.coef(0).unwrap(), sq);
        assert_eq!(l.coef(-1).unwrap(), p1.scale(&int(-2)));
        assert_eq!(l.coef(-2).unwrap(), SymSeries::one(pr));
    }

    #[test]
    fn shift_into_q2() {
        let pr = prof();
        let p2 = SymSeries::p(2, pr);
        let s = shift_q2(&p2, &rat(3, 1)).unwrap();
        let expected = &p2 + &SymSeries::scalar(BetaScalar::constant(int(3), 1), 0, -2, pr);
        assert_eq!(s, expected);
    }

    #[test]
    fn window_is_enforced() {
        let pr = prof();
        let l = LaurentX::monomial(5, SymSeries::one(pr));
        assert!(l.shift(2).is_err());
        assert!(l.coef(7).is_err());
        assert!(l.coef(-6).unwrap().is_zero());
    }

    #[test]
    fn product_collects_exponents() {
        let pr = prof();
        let a = x_scalar(1, BetaScalar::one(1), pr).checked_add(&x_scalar(-1, BetaScalar::one(1), pr)).unwrap();
        let sq = a.checked_mul(&a).unwrap();
        assert_eq!(sq.coef(0).unwrap(), SymSeries::constant(int(2), pr));
        assert_eq!(sq.coef(2).unwrap(), SymSeries::one(pr));
    }
}
