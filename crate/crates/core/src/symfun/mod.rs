//! Symmetric functions in power-sum coordinates: partitions, symmetric group
//! characters, Schur functions and the cut-and-join operator.

mod chars;
mod cutjoin;
mod partition;
mod schur;

pub use chars::{character, CharTable};
pub use cutjoin::{cutjoin_apply, cutjoin_eigenvalue, cutjoin_exp, CutJoinRoute};
pub use partition::{partitions_of, partitions_up_to, Partition};
pub use schur::{from_schur, schur_at_p1, schur_p, schur_specialize_equal, to_schur};

use crate::series::{BetaScalar, Key, Rational, SymSeries, TruncationProfile};

/// `h_k` of the times `sign * t`: `sum_{|mu| = k} sign^{l(mu)} p_mu / z_mu`,
/// i.e. the coefficient of `x^k` in `exp(sign * sum p_n x^n / n)`.
pub fn complete_h(k: i32, sign: i32, profile: TruncationProfile) -> SymSeries {
    let mut out = SymSeries::zero(profile);
    if k < 0 {
        return out;
    }
    for mu in partitions_of(k as u32) {
        let s = if sign < 0 && mu.len() % 2 == 1 { -1 } else { 1 };
        let c = Rational::new(s.into(), mu.z());
        out.add_term(Key::new(mu, 0, 0), BetaScalar::constant(c, profile.beta_order));
    }
    out
}
