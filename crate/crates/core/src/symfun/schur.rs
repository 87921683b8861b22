use std::collections::BTreeMap;

use num::{BigInt, One};

use super::chars::character;
use super::partition::{partitions_of, Partition};
use crate::error::{Error, Result};
use crate::series::{BetaScalar, Key, Rational, SymSeries, TruncationProfile};

/// `s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu`.
pub fn schur_p(lambda: &Partition, profile: TruncationProfile) -> SymSeries {
    let mut out = SymSeries::zero(profile);
    for mu in partitions_of(lambda.weight()) {
        let chi = character(lambda, &mu);
        if chi == 0 {
            continue;
        }
        let c = Rational::new(BigInt::from(chi), mu.z());
        out.add_term(Key::new(mu, 0, 0), BetaScalar::constant(c, profile.beta_order));
    }
    out
}

/// `s_lambda` at `p_1 = 1`, `p_n = 0` otherwise: `dim(lambda) / |lambda|!`.
pub fn schur_at_p1(lambda: &Partition) -> Rational {
    let n = lambda.weight();
    let column = Partition::new(vec![1; n as usize]).expect("valid");
    let fact: BigInt = (1..=n).map(BigInt::from).product();
    Rational::new(BigInt::from(character(lambda, &column)), fact)
}

/// `s_lambda(x, ..., x)` with `n` equal arguments is `c * x^{|lambda|}`;
/// returns `c = prod_{i<j} (a_i - a_j)/(j - i)`, `a_i = lambda_i + n - i`.
pub fn schur_specialize_equal(lambda: &Partition, n: usize) -> Result<(Rational, u32)> {
    if n < lambda.len() {
        return Err(Error::InvalidArgument(format!(
            "need at least l(lambda) = {} arguments, got {n}",
            lambda.len()
        )));
    }
    let a: Vec<i64> = (1..=n).map(|i| lambda.part(i) as i64 + n as i64 - i as i64).collect();
    let mut c = Rational::one();
    for i in 0..n {
        for j in (i + 1)..n {
            c *= Rational::new(BigInt::from(a[i] - a[j]), BigInt::from((j - i) as i64));
        }
    }
    Ok((c, lambda.weight()))
}

/// Schur expansion `s = sum_lambda a_lambda s_lambda` with scalar-series
/// coefficients (carrying `q1`, `q2`, `beta`).
pub fn to_schur(s: &SymSeries) -> BTreeMap<Partition, SymSeries> {
    let profile = *s.profile();
    let mut out: BTreeMap<Partition, SymSeries> = BTreeMap::new();
    for (key, c) in s.terms() {
        for lambda in partitions_of(key.lambda.weight()) {
            let chi = character(&lambda, &key.lambda);
            if chi == 0 {
                continue;
            }
            let entry = out
                .entry(lambda)
                .or_insert_with(|| SymSeries::zero(profile));
            entry.add_term(Key::scalar(key.q1, key.q2), c.scale(&Rational::from_integer(chi.into())));
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Inverse of [`to_schur`].
pub fn from_schur(coeffs: &BTreeMap<Partition, SymSeries>, profile: TruncationProfile) -> SymSeries {
    let mut out = SymSeries::zero(profile);
    for (lambda, a) in coeffs {
        if a.is_zero() || lambda.weight() > profile.max_p_weight {
            continue;
        }
        let s = schur_p(lambda, profile);
        out = &out + &a.reprofile(profile).checked_mul(&s).expect("same profile");
    }
    out
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{rat, rat_pow};

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_schur_functions() {
        let pr = TruncationProfile::closed(3, 0);
        let s2 = schur_p(&part(&[2]), pr);
        assert_eq!(s2.coeff(&part(&[1, 1]), 0, 0).constant_term(), rat(1, 2));
        assert_eq!(s2.coeff(&part(&[2]), 0, 0).constant_term(), rat(1, 2));
        let s11 = schur_p(&part(&[1, 1]), pr);
        assert_eq!(s11.coeff(&part(&[2]), 0, 0).constant_term(), rat(-1, 2));
    }

    #[test]
    fn dimension_at_p1() {
        assert_eq!(schur_at_p1(&part(&[2, 1])), rat(2, 6));
        assert_eq!(schur_at_p1(&part(&[3, 2])), rat(5, 120));
        assert_eq!(schur_at_p1(&Partition::empty()), rat(1, 1));
    }

    #[test]
    fn equal_specialization() {
        assert_eq!(schur_specialize_equal(&Partition::empty(), 3).unwrap().0, rat(1, 1));
        assert_eq!(schur_specialize_equal(&part(&[1]), 2).unwrap().0, rat(2, 1));
        assert_eq!(schur_specialize_equal(&part(&[2, 1]), 2).unwrap(), (rat(2, 1), 3));
        assert!(schur_specialize_equal(&part(&[1, 1, 1]), 2).is_err());
        // against p_n -> n
        for n in 1..=5usize {
            for lambda in crate::symfun::partitions_up_to(5) {
                if lambda.len() > n {
                    continue;
                }
                let s = schur_p(&lambda, TruncationProfile::closed(5, 0));
                let direct: Rational = s
                    .terms()
                    .map(|(k, c)| c.constant_term() * rat_pow(&Rational::from_integer((n as i64).into()), k.lambda.len() as u32))
                    .sum();
                assert_eq!(schur_specialize_equal(&lambda, n).unwrap().0, direct);
            }
        }
    }

    #[test]
    fn schur_round_trip() {
        let pr = TruncationProfile::open(4, 2, 1);
        let mut s = SymSeries::p(3, pr);
        s.add_term(Key::new(part(&[2, 1, 1]), 1, -1), BetaScalar::monomial(1, 0, rat(3, 5), 1));
        let back = from_schur(&to_schur(&s), pr);
        assert_eq!(back, s);
    }
}
