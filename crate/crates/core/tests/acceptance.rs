//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use hurwitz_core::hurwitz::{closed_hurwitz, open_free_energy, extract_open, OpenHurwitzQuery};
use hurwitz_core::kp::{CheckReport, SolitonParams};
use hurwitz_core::series::{int, rat};
use hurwitz_core::verify::*;
use hurwitz_core::{Partition, Result, TruncationProfile};

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn all_pass(r: Vec<CheckReport>) -> Result<bool> {
    let failed: Vec<_> = r.iter().filter(|c| !c.passed()).collect();
    for c in &failed {
        eprintln!("    failed check {}: {:?}", c.check, c.witness);
    }
    Ok(failed.is_empty())
}

fn oracle_equivalence() -> Result<bool> {
    let table = closed_oracle_table(5, 6)?;
    let mut ok = table.len() == 18 * 7 && table.iter().all(|(_, _, a, b)| a == b);
    let pr = TruncationProfile::closed(3, 2);
    ok &= closed_hurwitz(&part(&[1]), 0, pr)? == int(1);
    ok &= closed_hurwitz(&part(&[2]), 1, pr)? == rat(1, 2);
    ok &= closed_hurwitz(&part(&[3]), 2, pr)? == int(1);
    ok &= closed_hurwitz(&part(&[1, 1]), 2, pr)? == rat(1, 2);
    Ok(ok)
}

fn case_one() -> Result<bool> {
    let pr = TruncationProfile::open(5, 1, 0);
    let mut ok = true;
    for n in -2..=3 {
        let h = open_free_energy(n, pr)?;
        for k in 1..=5 {
            let q = OpenHurwitzQuery { lambda: Partition::row(k), m1: 0, m2: 0, d1: 0, n };
            ok &= extract_open(&h, &q) == rat(n, k as i64);
        }
    }
    Ok(ok)
}

fn soliton() -> Result<bool> {
    let params = SolitonParams::new(
        vec![int(1), int(2), rat(1, 2)],
        vec![int(-1), int(3), rat(-2, 3)],
        vec![int(1), rat(2, 5), int(-3)],
    )?;
    all_pass(suite_soliton(&params, TruncationProfile::closed(4, 0))?)
}

fn main() -> ExitCode {
    let desk = TruncationProfile::open(3, 3, 2);
    let criteria: Vec<(&str, Box<dyn Fn() -> Result<bool>>)> = vec![
        ("closed Hurwitz numbers equal the permutation count, |lambda| <= 5, m <= 6", Box::new(oracle_equivalence)),
        ("fermionic and cut-and-join routes agree, weight 5, beta order 4", Box::new(|| all_pass(suite_closed_routes(TruncationProfile::closed(5, 4))?))),
        ("Fay residual of the closed tau-function vanishes, weight 4, beta order 3", Box::new(|| all_pass(suite_kp(TruncationProfile::closed(4, 3))?))),
        ("rescaled open tau-functions form an mKP sequence, N = -2..1", Box::new(move || all_pass(suite_mkp(desk, &[-2, -1, 0, 1, 2])?))),
        ("explicit D-series transformation gives the level-one function", Box::new(move || all_pass(suite_bd_explicit(desk)?))),
        ("open tau-functions satisfy the beta2 cut-and-join equation, N = -2..2", Box::new(|| all_pass(suite_open(TruncationProfile::open(4, 4, 3), &[-2, -1, 0, 1, 2])?))),
        ("level zero collapses to the closed function; h_N((k),0,0,0) = N/k", Box::new(|| Ok(all_pass(suite_open(TruncationProfile::open(4, 3, 3), &[0])?)? && case_one()?))),
        ("Fock layer: boson-fermion map, fermion relations, alpha_n, reduction lemma", Box::new(|| all_pass(suite_fock(6, 2, &[vec![rat(-3, 4)], vec![int(2), rat(1, 3), int(-1)]])?))),
        ("soliton Wronskians: Fay, gamma chain k = 1..3, round trip", Box::new(soliton)),
        ("orthogonal complement reverses the times", Box::new(|| all_pass(suite_ortho(4)?))),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = match catch_unwind(AssertUnwindSafe(|| f())) {
            Ok(Ok(true)) => "pass".to_string(),
            Ok(Ok(false)) => "FAIL".to_string(),
            Ok(Err(e)) => format!("FAIL (error: {e})"),
            Err(_) => "FAIL (panic)".to_string(),
        };
        if outcome != "pass" {
            failures += 1;
        }
        println!("criterion {:>2}: {outcome}  {name}  [{:.2}s]", i + 1, start.elapsed().as_secs_f64());
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
