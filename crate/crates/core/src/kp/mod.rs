//! KP and mKP machinery at the level of tau-functions.

mod detect;
mod explicit;
mod fay;
mod ortho;
mod report;
mod soliton;
mod tau;

pub use detect::{bd_detect, first_mismatch, mkp_verify, Detection};
pub use explicit::{explicit_bd_check, unnormalized_coefficient};
pub use fay::{fay_residual, fay_residual_extended, FayResidual};
pub use ortho::ortho_rows;
pub use report::{CheckReport, Status, Witness};
pub use soliton::{exp_xi_at, soliton_chain_step, soliton_entry, soliton_gamma, soliton_tau, SolitonParams};
pub use tau::{
    adjoint_tau, bd_apply, bd_coef, exp_xi, tau_shift, wave, BdSeries, Direction, Sign, TauSeries, WaveKind,
};
