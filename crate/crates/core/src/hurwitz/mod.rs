//! Closed and open Hurwitz partition functions, their Hurwitz numbers, and
//! a brute-force symmetric-group oracle for the closed numbers.

mod closed;
mod open;
mod oracle;
mod theorem;

pub use closed::{closed_free_energy, closed_hurwitz, closed_rows, closed_tau, hurwitz_row, ClosedRoute};
pub use open::{
    check_query, closed_free_energy_merged, closed_tau_merged, extract_open, inner_profile, open_disk_factor,
    open_free_energy, open_hurwitz, open_tau, open_tau_base, open_tau_tilde, OpenHurwitzQuery,
};
pub use oracle::{closed_hurwitz_oracle, ORACLE_MAX_DEGREE, ORACLE_MAX_STEPS};
pub use theorem::{d_coefficient, d_series, open_tau1_via_d};

use crate::error::{Error, Result};

/// `n / 2`, failing loudly if `n` is odd.
pub fn half(n: i64) -> Result<i64> {
    if n % 2 != 0 {
        return Err(Error::Parity(format!("{n} is odd")));
    }
    Ok(n / 2)
}
