use std::collections::BTreeMap;

use hurwitz_core::fock::{alpha_apply, alpha_apply_fermionic, boson_fermion, boson_fermion_vertex, WedgeState};
use hurwitz_core::kp::{bd_apply, bd_detect, fay_residual, soliton_tau, BdSeries, Direction, SolitonParams};
use hurwitz_core::series::json;
use hurwitz_core::series::{rat, shift_q2, BetaScalar, BetaVar};
use hurwitz_core::symfun::{
    character, cutjoin_exp, from_schur, partitions_of, partitions_up_to, to_schur, CutJoinRoute,
};
use hurwitz_core::{Rational, SymSeries, TruncationProfile};
use num::{BigInt, Zero};
use proptest::prelude::*;

fn closed() -> TruncationProfile {
    TruncationProfile::closed(3, 2)
}

fn open() -> TruncationProfile {
    TruncationProfile::open(3, 2, 1)
}

fn small_rat() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

/// Random series in the closed profile with `q1` tied to the p-weight.
fn series() -> impl Strategy<Value = SymSeries> {
    let parts = partitions_up_to(3);
    prop::collection::vec((0..parts.len(), 0u32..=2, 0u32..=2, small_rat()), 0..6).prop_map(move |terms| {
        let mut s = SymSeries::zero(closed());
        for (i, m1, m2, c) in terms {
            if m1 + m2 > 2 {
                continue;
            }
            let lambda = parts[i].clone();
            let d = lambda.weight();
            let b = BetaScalar::monomial(m1, m2, c, 2);
            s = &s + &SymSeries::monomial(lambda, d, 0, b, closed());
        }
        s
    })
}

/// Random series in the open profile, homogeneous in `(p-weight, q2)`.
fn open_series() -> impl Strategy<Value = SymSeries> {
    let parts = partitions_up_to(3);
    prop::collection::vec((0..parts.len(), 0u32..=2, small_rat()), 0..5).prop_map(move |terms| {
        let mut s = SymSeries::zero(open());
        for (i, q1, c) in terms {
            let lambda = parts[i].clone();
            let d = lambda.weight() as i32;
            s = &s + &SymSeries::monomial(lambda, q1, d, BetaScalar::constant(c, 1), open());
        }
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &a), &SymSeries::zero(closed()));
        prop_assert_eq!(&a * &SymSeries::one(closed()), a.clone());
    }

    #[test]
    fn log_inverts_exp(a in series()) {
        let a = a.filter(|k| !(k.lambda.is_empty() && k.q1 == 0));
        let e = a.exp().unwrap();
        prop_assert_eq!(e.log().unwrap(), a);
    }

    #[test]
    fn inverse_of_unit(a in series()) {
        let u = &SymSeries::one(closed()) + &a.filter(|k| !k.lambda.is_empty());
        let inv = u.inverse().unwrap();
        prop_assert!((&u * &inv).is_one());
    }

    #[test]
    fn q2_shift_inverts(s in open_series(), c in small_rat()) {
        let there = shift_q2(&s, &c).unwrap();
        prop_assert_eq!(shift_q2(&there, &-c).unwrap(), s);
    }

    #[test]
    fn schur_round_trip(s in series()) {
        prop_assert_eq!(from_schur(&to_schur(&s), closed()), s);
    }

    #[test]
    fn cutjoin_routes_agree(s in series()) {
        for var in [BetaVar::B1, BetaVar::B2, BetaVar::Sum] {
            prop_assert_eq!(
                cutjoin_exp(&s, var, CutJoinRoute::Schur),
                cutjoin_exp(&s, var, CutJoinRoute::Iterated)
            );
        }
    }

    #[test]
    fn json_round_trip(s in series()) {
        prop_assert_eq!(json::from_str(&json::to_string(&s)).unwrap(), s);
    }

    #[test]
    fn boson_fermion_routes(level in -2i32..=2, cs in prop::collection::vec(small_rat(), 1..5)) {
        let pr = TruncationProfile::closed(4, 0);
        let parts = partitions_up_to(3);
        let mut v = WedgeState::zero(level, 8, pr);
        for (c, lambda) in cs.iter().zip(parts.iter().rev()) {
            v.add(lambda.clone(), &SymSeries::constant(c.clone(), pr));
        }
        prop_assert_eq!(boson_fermion(&v), boson_fermion_vertex(&v).unwrap());
        for n in [-2, -1, 1, 2] {
            prop_assert_eq!(alpha_apply(&v, n), alpha_apply_fermionic(&v, n));
        }
    }

    #[test]
    fn bd_round_trip(c1 in small_rat(), c2 in small_rat()) {
        let pr = TruncationProfile::closed(3, 0);
        let params = SolitonParams::new(vec![rat(1, 1), rat(3, 1)], vec![rat(-2, 1), rat(1, 2)], vec![rat(1, 1), rat(-1, 3)]).unwrap();
        let tau = soliton_tau(&params, 2, pr).unwrap();
        let c = BdSeries::new(vec![
            SymSeries::one(pr),
            SymSeries::constant(c1, pr),
            SymSeries::constant(c2, pr),
        ]).unwrap();
        let image = bd_apply(&tau, &c, Direction::Forward).unwrap();
        let det = bd_detect(&image, &tau, Direction::Backward, 3).unwrap();
        prop_assert!(det.witness.is_none());
    }

    #[test]
    fn one_soliton_is_tau(a in small_rat(), b in small_rat(), amp in small_rat()) {
        let pr = TruncationProfile::closed(4, 0);
        if let Ok(params) = SolitonParams::new(vec![a], vec![b], vec![amp]) {
            let tau = soliton_tau(&params, 1, pr).unwrap();
            prop_assert!(fay_residual(&tau).unwrap().is_zero());
        }
    }
}

#[test]
fn character_row_orthogonality() {
    for n in 1..=7u32 {
        let parts = partitions_of(n);
        let order: BigInt = (1..=n).map(BigInt::from).product();
        for l in &parts {
            for k in &parts {
                let s: BigInt = parts
                    .iter()
                    .map(|mu| BigInt::from(character(l, mu) * character(k, mu)) * (&order / mu.z()))
                    .sum();
                assert_eq!(s, if l == k { order.clone() } else { BigInt::zero() });
            }
        }
    }
}

#[test]
fn schur_expansion_of_p1_power() {
    let pr = TruncationProfile::closed(5, 0);
    let mut p1 = SymSeries::one(pr);
    for _ in 0..5 {
        p1 = &p1 * &SymSeries::p(1, pr);
    }
    let expansion: BTreeMap<_, _> = to_schur(&p1);
    for (lambda, c) in expansion {
        let dim = character(&lambda, &hurwitz_core::Partition::new(vec![1; 5]).unwrap());
        assert_eq!(c.constant_rational(), Rational::from_integer(dim.into()));
    }
}
