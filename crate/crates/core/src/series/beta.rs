use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Signed, Zero};

use super::{binomial, factorial, int, rat_pow, Rational};

/// Selects a beta parameter, or their sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BetaVar {
    B1,
    B2,
    Sum,
}

/// Polynomial in `beta1`, `beta2` with exact rational coefficients,
/// truncated at joint degree `order`.
///
/// Canonical form: no stored zero coefficients, no monomial of degree
/// above `order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BetaScalar {
    order: u32,
    coeffs: BTreeMap<(u32, u32), Rational>,
}

impl BetaScalar {
    pub fn zero(order: u32) -> Self {
        BetaScalar {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: u32) -> Self {
        Self::monomial(0, 0, c, order)
    }

    pub fn monomial(m1: u32, m2: u32, c: Rational, order: u32) -> Self {
        let mut s = Self::zero(order);
        s.add_term(m1, m2, c);
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, m1: u32, m2: u32) -> Rational {
        self.coeffs.get(&(m1, m2)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.coeffs.iter()
    }

    /// Lowest total degree of a stored monomial.
    pub fn valuation(&self) -> Option<u32> {
        self.coeffs.keys().map(|(a, b)| a + b).min()
    }

    pub fn add_term(&mut self, m1: u32, m2: u32, c: Rational) {
        if m1 + m2 > self.order || c.is_zero() {
            return;
        }
        match self.coeffs.entry((m1, m2)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &BetaScalar) {
        for (&(a, b), c) in &other.coeffs {
            self.add_term(a, b, c.clone());
        }
    }

    pub fn add(&self, other: &BetaScalar) -> BetaScalar {
        let mut out = self.clone();
        out.order = self.order.min(other.order);
        out.coeffs.retain(|(a, b), _| a + b <= out.order);
        for (&(a, b), c) in &other.coeffs {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn neg(&self) -> BetaScalar {
        BetaScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &BetaScalar) -> BetaScalar {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &Rational) -> BetaScalar {
        if r.is_zero() {
            return BetaScalar::zero(self.order);
        }
        BetaScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c * r)).collect(),
        }
    }

    pub fn mul(&self, other: &BetaScalar) -> BetaScalar {
        let order = self.order.min(other.order);
        let mut out = BetaScalar::zero(order);
        for (&(a1, b1), c1) in &self.coeffs {
            for (&(a2, b2), c2) in &other.coeffs {
                if a1 + a2 + b1 + b2 <= order {
                    out.add_term(a1 + a2, b1 + b2, c1 * c2);
                }
            }
        }
        out
    }

    /// `exp(c1*beta1 + c2*beta2)` truncated at `order`.
    pub fn exp_linear(c1: &Rational, c2: &Rational, order: u32) -> BetaScalar {
        let mut out = BetaScalar::zero(order);
        for m1 in 0..=order {
            let t1 = rat_pow(c1, m1) / Rational::from_integer(factorial(m1));
            for m2 in 0..=(order - m1) {
                let t2 = rat_pow(c2, m2) / Rational::from_integer(factorial(m2));
                out.add_term(m1, m2, &t1 * t2);
            }
        }
        out
    }

    /// `exp(c * v)` for an integer multiple of a beta parameter.
    pub fn exp_of(var: BetaVar, c: i64, order: u32) -> BetaScalar {
        let c = int(c);
        let z = Rational::zero();
        match var {
            BetaVar::B1 => Self::exp_linear(&c, &z, order),
            BetaVar::B2 => Self::exp_linear(&z, &c, order),
            BetaVar::Sum => Self::exp_linear(&c, &c, order),
        }
    }

    /// Substitutes `beta1 -> beta1 + beta2` (a single-parameter series stored
    /// on the `beta1` slot becomes a series in the sum).
    pub fn beta1_to_sum(&self) -> BetaScalar {
        let mut out = BetaScalar::zero(self.order);
        for (&(a, b), c) in &self.coeffs {
            for r in 0..=a {
                let coef = Rational::from_integer(binomial(a, r)) * c;
                out.add_term(a - r, b + r, coef);
            }
        }
        out
    }

    /// Sets `beta2 = 0`.
    pub fn at_beta2_zero(&self) -> BetaScalar {
        BetaScalar {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .filter(|((_, b), _)| *b == 0)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Formal derivative in `beta2` (or `beta1`). The order drops by one so
    /// that no truncated monomial is mistaken for an exact zero.
    pub fn derive(&self, var: BetaVar) -> BetaScalar {
        let order = self.order.saturating_sub(1);
        let mut out = BetaScalar::zero(order);
        for (&(a, b), c) in &self.coeffs {
            match var {
                BetaVar::B1 if a > 0 => out.add_term(a - 1, b, c * int(a as i64)),
                BetaVar::B2 if b > 0 => out.add_term(a, b - 1, c * int(b as i64)),
                _ => {}
            }
        }
        out
    }

    /// Re-truncates at a lower order.
    pub fn truncate(&self, order: u32) -> BetaScalar {
        let order = order.min(self.order);
        BetaScalar {
            order,
            coeffs: self
                .coeffs
                .iter()
                .filter(|((a, b), _)| a + b <= order)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Raises the stored order without inventing terms (explicit widening).
    pub fn embed(&self, order: u32) -> BetaScalar {
        BetaScalar {
            order: order.max(self.order),
            coeffs: self.coeffs.clone(),
        }
    }

    /// Multiplicative inverse; requires a nonzero rational constant term.
    pub fn inverse(&self) -> Option<BetaScalar> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return None;
        }
        let inv0 = c0.recip();
        let mut nil = self.scale(&inv0);
        nil.add_term(0, 0, -Rational::one());
        let neg = nil.neg();
        let mut out = BetaScalar::one(self.order);
        let mut power = BetaScalar::one(self.order);
        for _ in 0..self.order {
            power = power.mul(&neg);
            if power.is_zero() {
                break;
            }
            out.add_assign_ref(&power);
        }
        Some(out.scale(&inv0))
    }

    pub fn numerators_denominators(&self) -> impl Iterator<Item = (u32, u32, BigInt, BigInt)> + '_ {
        self.coeffs
            .iter()
            .map(|(&(a, b), c)| (a, b, c.numer().clone(), c.denom().clone()))
    }
}

impl fmt::Debug for BetaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BetaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(a, b), c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            write!(f, "{}", c.abs())?;
            if a > 0 {
                write!(f, "*b1^{a}")?;
            }
            if b > 0 {
                write!(f, "*b2^{b}")?;
            }
        }
        Ok(())
    }
}
