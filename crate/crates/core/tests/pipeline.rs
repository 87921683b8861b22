use hurwitz_core::hurwitz::{
    closed_hurwitz, closed_hurwitz_oracle, closed_tau_merged, open_hurwitz, open_tau, OpenHurwitzQuery,
};
use hurwitz_core::kp::{bd_detect, Direction};
use hurwitz_core::hurwitz::open_tau_tilde;
use hurwitz_core::series::{int, rat};
use hurwitz_core::{Partition, TruncationProfile};

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn closed_values_match_oracle_in_a_larger_profile() {
    let pr = TruncationProfile::closed(4, 5);
    for (lambda, m) in [(part(&[4]), 3), (part(&[2, 2]), 4), (part(&[2, 1, 1]), 5), (part(&[3, 1]), 4)] {
        assert_eq!(closed_hurwitz(&lambda, m, pr).unwrap(), closed_hurwitz_oracle(&lambda, m).unwrap());
    }
}

#[test]
fn disk_only_term() {
    let pr = TruncationProfile::open(2, 2, 1);
    for n in [-2, 1, 3] {
        let q = OpenHurwitzQuery { lambda: Partition::empty(), m1: 0, m2: 0, d1: 1, n };
        assert_eq!(open_hurwitz(&q, pr).unwrap(), int(-n));
    }
}

#[test]
fn case_one_and_level_zero() {
    let pr = TruncationProfile::open(3, 2, 1);
    for n in [-1, 2] {
        for k in 1..=3 {
            let q = OpenHurwitzQuery { lambda: Partition::row(k), m1: 0, m2: 0, d1: 0, n };
            assert_eq!(open_hurwitz(&q, pr).unwrap(), rat(n, k as i64));
        }
    }
    assert_eq!(open_tau(0, pr).unwrap(), closed_tau_merged(pr).unwrap());
}

#[test]
fn consecutive_levels_are_related_but_not_identical() {
    let pr = TruncationProfile::open(3, 2, 1);
    let a = open_tau_tilde(0, pr).unwrap();
    let b = open_tau_tilde(1, pr).unwrap();
    let det = bd_detect(&a, &b, Direction::Forward, 3).unwrap();
    assert!(det.witness.is_none());
    assert!(!det.c.c(1).unwrap().is_zero());
}
