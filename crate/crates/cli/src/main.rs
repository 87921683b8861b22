//! `openhurwitz`: Hurwitz tables and tau-function verification suites.

mod config;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hurwitz_core::hurwitz::{
    closed_free_energy, closed_hurwitz_oracle, open_free_energy, open_tau, open_tau1_via_d, ORACLE_MAX_DEGREE,
    ORACLE_MAX_STEPS,
};
use hurwitz_core::kp::{first_mismatch, soliton_tau, CheckReport};
use hurwitz_core::series::factorial;
use hurwitz_core::{verify, Error, Partition, Rational};
use num::Zero;

use config::Options;
use output::{ClosedRow, OpenRow, Outcome, SolitonDemo, Table, VerifyReport};

#[derive(Parser, Debug)]
#[command(name = "openhurwitz", version, about = "Closed and open Hurwitz numbers as KP/mKP tau-functions")]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table of closed Hurwitz numbers h(lambda, m) with an oracle column.
    Closed,
    /// Per-N tables of open Hurwitz numbers h_N(lambda, m1, m2, d1).
    Open,
    /// Run verification suites and emit a report.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Build soliton Wronskians and run the soliton suite on them.
    SolitonDemo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Suite {
    Kp,
    Mkp,
    BdExplicit,
    Fock,
    Soliton,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Kp => "kp",
            Suite::Mkp => "mkp",
            Suite::BdExplicit => "bd-explicit",
            Suite::Fock => "fock",
            Suite::Soliton => "soliton",
            Suite::All => "all",
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidProfile(_)
        | Error::ProfileMismatch
        | Error::ProfileWiden(_)
        | Error::WindowExhausted { .. }
        | Error::OutOfProfile(_)
        | Error::InvalidArgument(_)
        | Error::DegenerateSoliton(_)
        | Error::OracleBounds { .. }
        | Error::Parity(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = cli.opts.validate().and_then(|()| match cli.cmd {
        Command::Closed => cmd_closed(&cli.opts),
        Command::Open => cmd_open(&cli.opts),
        Command::Verify { suite } => cmd_verify(&cli.opts, suite),
        Command::SolitonDemo => cmd_soliton_demo(&cli.opts),
    });
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn cmd_closed(opts: &Options) -> hurwitz_core::Result<Outcome> {
    let profile = opts.closed_profile()?;
    let h = closed_free_energy(profile)?;
    let mut rows = Vec::new();
    for (key, coeff) in h.terms() {
        if key.lambda.is_empty() {
            continue;
        }
        for m in 0..=profile.beta_order {
            let value = coeff.coeff(m, 0) * Rational::from_integer(factorial(m));
            rows.push((key.lambda.clone(), m, value));
        }
    }
    let mut table = Vec::new();
    let mut ok = true;
    let mut seen = std::collections::BTreeSet::new();
    for (lambda, m, value) in rows {
        seen.insert((lambda.clone(), m));
        let oracle = oracle_value(&lambda, m)?;
        if value.is_zero() && oracle.as_ref().map_or(true, |o| o.is_zero()) {
            continue;
        }
        let matches = oracle.as_ref().map(|o| *o == value);
        ok &= matches != Some(false);
        table.push(ClosedRow::new(&lambda, m, &value, oracle.as_ref(), matches));
    }
    for lambda in hurwitz_core::symfun::partitions_up_to(profile.max_p_weight).into_iter().skip(1) {
        for m in 0..=profile.beta_order {
            if seen.contains(&(lambda.clone(), m)) {
                continue;
            }
            if let Some(o) = oracle_value(&lambda, m)? {
                if !o.is_zero() {
                    ok = false;
                    table.push(ClosedRow::new(&lambda, m, &Rational::zero(), Some(&o), Some(false)));
                }
            }
        }
    }
    table.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    output::emit(opts, &Table { profile, rows: table })?;
    Ok(Outcome::from_ok(ok))
}

fn oracle_value(lambda: &Partition, m: u32) -> hurwitz_core::Result<Option<Rational>> {
    if lambda.weight() > ORACLE_MAX_DEGREE || m > ORACLE_MAX_STEPS {
        return Ok(None);
    }
    closed_hurwitz_oracle(lambda, m).map(Some)
}

fn cmd_open(opts: &Options) -> hurwitz_core::Result<Outcome> {
    let profile = opts.open_profile()?;
    let mut rows = Vec::new();
    let mut ok = true;
    for &n in &opts.levels()? {
        let h = open_free_energy(n, profile)?;
        for (key, coeff) in h.terms() {
            let case1 = key.lambda.len() == 1 && key.q1 == 0;
            for (&(m1, m2), c) in coeff.terms() {
                let value = c * Rational::from_integer(factorial(m1) * factorial(m2));
                let expected = (case1 && m1 == 0 && m2 == 0)
                    .then(|| Rational::new(n.into(), key.lambda.part(1).into()));
                if let Some(e) = &expected {
                    ok &= *e == value;
                }
                rows.push(OpenRow::new(&key.lambda, m1, m2, key.q1, n, &value, expected.as_ref()));
            }
        }
        if n == 0 {
            for k in 1..=profile.max_p_weight {
                let lambda = Partition::row(k);
                if !rows.iter().any(|r| r.is_case1(&lambda, n)) {
                    rows.push(OpenRow::new(&lambda, 0, 0, 0, n, &Rational::zero(), Some(&Rational::zero())));
                }
            }
        }
        if n == 1 {
            ok &= first_mismatch(&open_tau1_via_d(profile)?, &open_tau(1, profile)?)?.is_none();
        }
    }
    rows.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    output::emit(opts, &Table { profile, rows })?;
    Ok(Outcome::from_ok(ok))
}

fn run_suite(opts: &Options, suite: Suite) -> hurwitz_core::Result<Vec<CheckReport>> {
    match suite {
        Suite::Kp => {
            let pr = opts.closed_profile()?;
            let mut out = verify::suite_kp(pr)?;
            out.extend(verify::suite_closed_routes(pr)?);
            Ok(out)
        }
        Suite::Mkp => {
            let pr = opts.open_profile()?;
            let levels = opts.levels()?;
            let mut out = verify::suite_mkp(pr, &levels)?;
            out.extend(verify::suite_open(pr, &levels)?);
            Ok(out)
        }
        Suite::BdExplicit => verify::suite_bd_explicit(opts.open_profile()?),
        Suite::Fock => {
            let mut out = verify::suite_fock(opts.weight, opts.beta_order, &opts.random_rows())?;
            out.extend(verify::suite_ortho(opts.weight)?);
            Ok(out)
        }
        Suite::Soliton => verify::suite_soliton(&opts.soliton_params()?, opts.soliton_profile()?),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

fn cmd_verify(opts: &Options, suite: Suite) -> hurwitz_core::Result<Outcome> {
    let suites = match suite {
        Suite::All => vec![Suite::Kp, Suite::Mkp, Suite::BdExplicit, Suite::Fock, Suite::Soliton],
        s => vec![s],
    };
    if suites.contains(&Suite::Soliton) {
        opts.soliton_params()?;
    }
    let results: Vec<(Suite, hurwitz_core::Result<Vec<CheckReport>>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&s| (s, scope.spawn(move || run_suite(opts, s))))
            .collect();
        handles
            .into_iter()
            .map(|(s, h)| (s, h.join().expect("suite thread panicked")))
            .collect()
    });
    let mut report = VerifyReport::new(suite.name());
    for (s, r) in results {
        report.add(s.name(), r?);
    }
    let ok = report.passed();
    output::emit(opts, &report)?;
    Ok(Outcome::from_ok(ok))
}

fn cmd_soliton_demo(opts: &Options) -> hurwitz_core::Result<Outcome> {
    let params = opts.soliton_params()?;
    let profile = opts.soliton_profile()?;
    let taus = (1..=params.len())
        .map(|k| soliton_tau(&params, k, profile))
        .collect::<hurwitz_core::Result<Vec<_>>>()?;
    let checks = verify::suite_soliton(&params, profile)?;
    let demo = SolitonDemo::new(&taus, checks);
    let ok = demo.passed();
    output::emit(opts, &demo)?;
    Ok(Outcome::from_ok(ok))
}
