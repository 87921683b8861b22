use num::{BigInt, One};

use super::partition::Partition;
use super::schur::{from_schur, to_schur};
use crate::series::{int, BetaScalar, BetaVar, Key, Rational, SymSeries};

/// Eigenvalue of the cut-and-join operator on `s_lambda`:
/// `sum_i lambda_i (lambda_i - 2i + 1) / 2`.
pub fn cutjoin_eigenvalue(lambda: &Partition) -> i64 {
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &l)| {
            let l = l as i64;
            let i = i as i64 + 1;
            l * (l - 2 * i + 1) / 2
        })
        .sum()
}

/// `A = 1/2 sum_{i,j} ((i+j) p_i p_j d/dp_{i+j} + i j p_{i+j} d^2/dp_i dp_j)`.
pub fn cutjoin_apply(s: &SymSeries) -> SymSeries {
    let profile = *s.profile();
    let mut out = SymSeries::zero(profile);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    for (key, c) in s.terms() {
        let mults = key.lambda.multiplicities();
        // cut
        for (&n, &m) in &mults {
            let rest = key.lambda.remove_part(n).expect("part present");
            for i in 1..n {
                let lambda = rest.add_part(i).add_part(n - i);
                let f = &half * int((n as i64) * (m as i64));
                out.add_term(Key::new(lambda, key.q1, key.q2), c.scale(&f));
            }
        }
        // join
        for (&i, &mi) in &mults {
            for (&j, &mj) in &mults {
                let count = if i == j { mi as i64 * (mi as i64 - 1) } else { mi as i64 * mj as i64 };
                if count == 0 {
                    continue;
                }
                let rest = key.lambda.remove_part(i).and_then(|r| r.remove_part(j)).expect("parts present");
                let lambda = rest.add_part(i + j);
                let f = &half * int(count * i as i64 * j as i64);
                out.add_term(Key::new(lambda, key.q1, key.q2), c.scale(&f));
            }
        }
    }
    out
}

/// Evaluation route for `exp(beta A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutJoinRoute {
    /// Diagonalize in the Schur basis.
    Schur,
    /// Sum `beta^k A^k / k!` until the beta order runs out.
    Iterated,
}

/// `exp(v A) s` where `v` is `beta1`, `beta2` or their sum.
pub fn cutjoin_exp(s: &SymSeries, var: BetaVar, route: CutJoinRoute) -> SymSeries {
    let profile = *s.profile();
    let order = profile.beta_order;
    match route {
        CutJoinRoute::Schur => {
            let mut coeffs = to_schur(s);
            for (lambda, a) in coeffs.iter_mut() {
                let e = BetaScalar::exp_of(var, cutjoin_eigenvalue(lambda), order);
                *a = a.scale_beta(&e);
            }
            from_schur(&coeffs, profile)
        }
        CutJoinRoute::Iterated => {
            let v = match var {
                BetaVar::B1 => BetaScalar::monomial(1, 0, Rational::one(), order),
                BetaVar::B2 => BetaScalar::monomial(0, 1, Rational::one(), order),
                BetaVar::Sum => BetaScalar::monomial(1, 0, Rational::one(), order)
                    .add(&BetaScalar::monomial(0, 1, Rational::one(), order)),
            };
            let mut out = s.clone();
            let mut term = s.clone();
            for k in 1..=order {
                term = cutjoin_apply(&term).scale_beta(&v).scale(&int(k as i64).recip());
                if term.is_zero() {
                    break;
                }
                out = &out + &term;
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::TruncationProfile;
    use crate::symfun::{partitions_up_to, schur_p};

    #[test]
    fn eigenvalues_on_schur_functions() {
        let pr = TruncationProfile::closed(5, 0);
        for lambda in partitions_up_to(5) {
            let s = schur_p(&lambda, pr);
            let e = cutjoin_eigenvalue(&lambda);
            assert_eq!(cutjoin_apply(&s), s.scale(&int(e)), "lambda = {lambda}");
        }
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(cutjoin_eigenvalue(&Partition::new(vec![2]).unwrap()), 1);
        assert_eq!(cutjoin_eigenvalue(&Partition::new(vec![1, 1]).unwrap()), -1);
        assert_eq!(cutjoin_eigenvalue(&Partition::new(vec![3, 1]).unwrap()), 2);
    }

    #[test]
    fn routes_agree() {
        let pr = TruncationProfile::open(4, 2, 3);
        let mut s = SymSeries::p(1, pr);
        s = &(&s * &s) + &SymSeries::p(3, pr);
        s.add_term(
            Key::new(Partition::new(vec![2, 2]).unwrap(), 1, 2),
            BetaScalar::monomial(0, 1, int(2), 3),
        );
        for var in [BetaVar::B1, BetaVar::B2, BetaVar::Sum] {
            assert_eq!(
                cutjoin_exp(&s, var, CutJoinRoute::Schur),
                cutjoin_exp(&s, var, CutJoinRoute::Iterated)
            );
        }
    }
}
