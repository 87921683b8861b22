//! Canonical JSON form of series: terms listed in key order, rationals as
//! decimal numerator/denominator strings.

use serde::{Deserialize, Serialize};

use super::{BetaScalar, Key, Rational, SymSeries, TruncationProfile};
use crate::error::{Error, Result};
use crate::symfun::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaTerm {
    pub m1: u32,
    pub m2: u32,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub lambda: Vec<u32>,
    pub q1: u32,
    pub q2: i32,
    pub beta: Vec<BetaTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub profile: TruncationProfile,
    pub terms: Vec<Term>,
}

pub fn to_json(s: &SymSeries) -> SeriesJson {
    let terms = s
        .terms()
        .map(|(k, c)| Term {
            lambda: k.lambda.parts().to_vec(),
            q1: k.q1,
            q2: k.q2,
            beta: c
                .numerators_denominators()
                .map(|(m1, m2, n, d)| BetaTerm {
                    m1,
                    m2,
                    num: n.to_string(),
                    den: d.to_string(),
                })
                .collect(),
        })
        .collect();
    SeriesJson {
        profile: *s.profile(),
        terms,
    }
}

pub fn from_json(j: &SeriesJson) -> Result<SymSeries> {
    j.profile.validate()?;
    let order = j.profile.beta_order;
    let mut out = SymSeries::zero(j.profile);
    for t in &j.terms {
        let lambda = Partition::new(t.lambda.clone())?;
        let mut c = BetaScalar::zero(order);
        for b in &t.beta {
            let parse = |s: &str| {
                s.parse()
                    .map_err(|_| Error::InvalidArgument(format!("bad integer {s:?}")))
            };
            let den: num::BigInt = parse(&b.den)?;
            if den == num::BigInt::from(0) {
                return Err(Error::InvalidArgument("zero denominator".into()));
            }
            c.add_term(b.m1, b.m2, Rational::new(parse(&b.num)?, den));
        }
        out.add_term(Key::new(lambda, t.q1, t.q2), c);
    }
    Ok(out)
}

pub fn to_string(s: &SymSeries) -> String {
    serde_json::to_string(&to_json(s)).expect("serializable")
}

pub fn from_str(text: &str) -> Result<SymSeries> {
    let j: SeriesJson =
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    from_json(&j)
}
