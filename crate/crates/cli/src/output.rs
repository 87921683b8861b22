use std::fs::File;
use std::io::{self, Write};

use hurwitz_core::kp::CheckReport;
use hurwitz_core::series::json::{to_json, SeriesJson};
use hurwitz_core::{Error, Partition, Rational, Result, SymSeries, TruncationProfile};
use serde::Serialize;

use crate::config::{Format, Options};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

/// Exact rational as decimal numerator/denominator strings.
#[derive(Clone, Debug, Serialize)]
pub struct Value {
    pub num: String,
    pub den: String,
}

impl Value {
    fn new(r: &Rational) -> Self {
        Value {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

fn dashed(p: &Partition) -> String {
    p.parts().iter().map(u32::to_string).collect::<Vec<_>>().join("-")
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedRow {
    pub lambda: Vec<u32>,
    pub m: u32,
    pub value: Value,
    pub oracle: Option<Value>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
}

impl ClosedRow {
    pub fn new(lambda: &Partition, m: u32, value: &Rational, oracle: Option<&Rational>, matches: Option<bool>) -> Self {
        ClosedRow {
            lambda: lambda.parts().to_vec(),
            m,
            value: Value::new(value),
            oracle: oracle.map(Value::new),
            matches,
        }
    }

    pub fn sort_key(&self) -> (u32, Vec<u32>, u32) {
        (self.lambda.iter().sum(), self.lambda.clone(), self.m)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OpenRow {
    pub lambda: Vec<u32>,
    pub m1: u32,
    pub m2: u32,
    pub d1: u32,
    #[serde(rename = "N")]
    pub n: i64,
    pub value: Value,
    pub case1_expected: Option<Value>,
    pub case1_match: Option<bool>,
}

impl OpenRow {
    pub fn new(lambda: &Partition, m1: u32, m2: u32, d1: u32, n: i64, value: &Rational, expected: Option<&Rational>) -> Self {
        OpenRow {
            lambda: lambda.parts().to_vec(),
            m1,
            m2,
            d1,
            n,
            value: Value::new(value),
            case1_expected: expected.map(Value::new),
            case1_match: expected.map(|e| e == value),
        }
    }

    pub fn is_case1(&self, lambda: &Partition, n: i64) -> bool {
        self.n == n && self.lambda == lambda.parts() && self.m1 == 0 && self.m2 == 0 && self.d1 == 0
    }

    pub fn sort_key(&self) -> (i64, u32, Vec<u32>, u32, u32, u32) {
        (self.n, self.lambda.iter().sum(), self.lambda.clone(), self.d1, self.m1, self.m2)
    }
}

#[derive(Debug, Serialize)]
pub struct Table<R> {
    pub profile: TruncationProfile,
    pub rows: Vec<R>,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub status: &'static str,
    pub checks: Vec<CheckReport>,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub requested: String,
    pub status: &'static str,
    pub suites: Vec<SuiteReport>,
}

fn status(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

impl VerifyReport {
    pub fn new(requested: &str) -> Self {
        VerifyReport {
            requested: requested.to_string(),
            status: "pass",
            suites: Vec::new(),
        }
    }

    pub fn add(&mut self, suite: &str, mut checks: Vec<CheckReport>) {
        checks.sort_by(|a, b| a.check.cmp(&b.check));
        let ok = checks.iter().all(CheckReport::passed);
        self.suites.push(SuiteReport {
            suite: suite.to_string(),
            status: status(ok),
            checks,
        });
        self.suites.sort_by(|a, b| a.suite.cmp(&b.suite));
        self.status = status(self.suites.iter().all(|s| s.status == "pass"));
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

#[derive(Debug, Serialize)]
pub struct SolitonTau {
    pub k: usize,
    pub tau: SeriesJson,
}

#[derive(Debug, Serialize)]
pub struct SolitonDemo {
    pub status: &'static str,
    pub taus: Vec<SolitonTau>,
    pub checks: Vec<CheckReport>,
}

impl SolitonDemo {
    pub fn new(taus: &[SymSeries], mut checks: Vec<CheckReport>) -> Self {
        checks.sort_by(|a, b| a.check.cmp(&b.check));
        SolitonDemo {
            status: status(checks.iter().all(CheckReport::passed)),
            taus: taus
                .iter()
                .enumerate()
                .map(|(i, t)| SolitonTau { k: i + 1, tau: to_json(t) })
                .collect(),
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Something that can be written as JSON or CSV.
pub trait Emit: Serialize {
    fn csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()>;
}

fn opt_value(v: &Option<Value>) -> (String, String) {
    v.as_ref().map_or((String::new(), String::new()), |v| (v.num.clone(), v.den.clone()))
}

fn opt_bool(b: Option<bool>) -> String {
    b.map_or(String::new(), |b| b.to_string())
}

impl Emit for Table<ClosedRow> {
    fn csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        w.write_record(["lambda", "m", "value_num", "value_den", "oracle_num", "oracle_den", "match"])?;
        for r in &self.rows {
            let (on, od) = opt_value(&r.oracle);
            let lambda = dashed(&Partition::from_unsorted(r.lambda.clone()));
            w.write_record([lambda, r.m.to_string(), r.value.num.clone(), r.value.den.clone(), on, od, opt_bool(r.matches)])?;
        }
        Ok(())
    }
}

impl Emit for Table<OpenRow> {
    fn csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        w.write_record(["lambda", "m1", "m2", "d1", "N", "value_num", "value_den", "case1_num", "case1_den", "case1_match"])?;
        for r in &self.rows {
            let (en, ed) = opt_value(&r.case1_expected);
            let lambda = dashed(&Partition::from_unsorted(r.lambda.clone()));
            w.write_record([
                lambda,
                r.m1.to_string(),
                r.m2.to_string(),
                r.d1.to_string(),
                r.n.to_string(),
                r.value.num.clone(),
                r.value.den.clone(),
                en,
                ed,
                opt_bool(r.case1_match),
            ])?;
        }
        Ok(())
    }
}

fn check_records(w: &mut csv::Writer<Vec<u8>>, suite: &str, checks: &[CheckReport]) -> csv::Result<()> {
    for c in checks {
        let witness = c
            .witness
            .as_ref()
            .map(|x| serde_json::to_string(x).expect("witness serializes"))
            .unwrap_or_default();
        let st = if c.passed() { "pass" } else { "fail" };
        w.write_record([suite, c.check.as_str(), st, witness.as_str()])?;
    }
    Ok(())
}

impl Emit for VerifyReport {
    fn csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        w.write_record(["suite", "check", "status", "witness"])?;
        for s in &self.suites {
            check_records(w, &s.suite, &s.checks)?;
        }
        Ok(())
    }
}

impl Emit for SolitonDemo {
    fn csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        w.write_record(["k", "lambda", "value_num", "value_den"])?;
        for t in &self.taus {
            for term in &t.tau.terms {
                let lambda = term.lambda.iter().map(u32::to_string).collect::<Vec<_>>().join("-");
                for b in &term.beta {
                    w.write_record([t.k.to_string(), lambda.clone(), b.num.clone(), b.den.clone()])?;
                }
            }
        }
        Ok(())
    }
}

fn io_error(e: impl std::fmt::Display) -> Error {
    Error::InvalidArgument(format!("cannot write output: {e}"))
}

/// Writes `item` in the configured format to the configured destination.
pub fn emit<T: Emit>(opts: &Options, item: &T) -> Result<()> {
    let bytes = match opts.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(item).map_err(io_error)?;
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            item.csv(&mut w).map_err(io_error)?;
            w.into_inner().map_err(io_error)?
        }
    };
    match &opts.out {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(&bytes)).map_err(io_error),
        None => io::stdout().write_all(&bytes).map_err(io_error),
    }
}
