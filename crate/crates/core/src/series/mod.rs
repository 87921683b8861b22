//! Multigraded truncated series over exact rationals.
//!
//! A [`SymSeries`] is a finite sum of terms `c * p_lambda * q1^e1 * q2^e2`
//! with `c` a [`BetaScalar`] (a polynomial in `beta1`, `beta2` truncated at a
//! joint order). A [`LaurentX`] adjoins a Laurent variable `x` with a fixed
//! exponent window. Truncation is eager: terms outside the profile are
//! dropped at creation.

mod beta;
pub mod json;
mod laurent;
mod profile;
mod sym;

pub use beta::{BetaScalar, BetaVar};
pub use laurent::{expand_shift, shift_q2, x_scalar, LaurentX, ShiftBase};
pub use profile::TruncationProfile;
pub use sym::{Key, SymSeries};

use num::{BigInt, BigRational, One};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `c^k` for a rational `c`.
pub fn rat_pow(c: &Rational, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * c)
}

pub fn series_mul(a: &SymSeries, b: &SymSeries) -> crate::Result<SymSeries> {
    a.checked_mul(b)
}

pub fn series_exp(s: &SymSeries) -> crate::Result<SymSeries> {
    s.exp()
}

pub fn series_log(s: &SymSeries) -> crate::Result<SymSeries> {
    s.log()
}

/// `p_n -> p_n + c u^{-n}`; for `u = q2` the result sits at `x^0`.
pub fn shift_p(s: &SymSeries, c: &Rational, base: ShiftBase) -> crate::Result<LaurentX> {
    expand_shift(s, base, c)
}

pub fn scale_q2(s: &SymSeries, n: i64) -> SymSeries {
    s.scale_q2(n)
}

pub fn coef_x(l: &LaurentX, k: i32) -> crate::Result<SymSeries> {
    l.coef(k)
}

pub fn coef_x0(l: &LaurentX) -> crate::Result<SymSeries> {
    l.coef(0)
}

/// Variable for [`derive`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Wrt {
    P(u32),
    T(u32),
    Beta2,
}

pub fn derive(s: &SymSeries, wrt: Wrt) -> SymSeries {
    match wrt {
        Wrt::P(n) => s.derive_p(n),
        Wrt::T(n) => s.derive_t(n),
        Wrt::Beta2 => s.derive_beta(BetaVar::B2),
    }
}
