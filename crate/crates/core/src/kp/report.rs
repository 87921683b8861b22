use serde::{Deserialize, Serialize};

use crate::series::json::BetaTerm;
use crate::series::{BetaScalar, Key, TruncationProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Location and value of the first coefficient that breaks an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub lambda: Vec<u32>,
    pub q1: u32,
    pub q2: i32,
    /// Laurent exponents, outermost first, when the identity has them.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub x: Vec<i32>,
    pub value: Vec<BetaTerm>,
}

impl Witness {
    pub fn new(key: &Key, value: &BetaScalar, x: Vec<i32>) -> Self {
        Witness {
            lambda: key.lambda.parts().to_vec(),
            q1: key.q1,
            q2: key.q2,
            x,
            value: value
                .numerators_denominators()
                .map(|(m1, m2, n, d)| BetaTerm {
                    m1,
                    m2,
                    num: n.to_string(),
                    den: d.to_string(),
                })
                .collect(),
        }
    }
}

/// `{"check", "profile", "status", "witness"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub profile: TruncationProfile,
    pub status: Status,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, profile: TruncationProfile, witness: Option<Witness>) -> Self {
        CheckReport {
            check: check.into(),
            profile,
            status: if witness.is_none() { Status::Pass } else { Status::Fail },
            witness,
        }
    }

    /// A boolean check without a coefficient witness.
    pub fn flag(check: impl Into<String>, profile: TruncationProfile, ok: bool) -> Self {
        CheckReport {
            check: check.into(),
            profile,
            status: if ok { Status::Pass } else { Status::Fail },
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
