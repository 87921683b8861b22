//! Exact-arithmetic engine for closed and open Hurwitz generating series
//! viewed as KP tau-functions.
//!
//! Everything is computed over exact rationals in a multigraded truncated
//! series ring (power sums `p_n`, grading variables `q1`, `q2`, nilpotent
//! parameters `beta1`, `beta2` and an adjoined Laurent variable `x`).
//!
//! * [`series`]: the truncated ring, Laurent adjunction, shifts and JSON form.
//! * [`symfun`]: partitions, characters, Schur functions, cut-and-join.
//! * [`fock`]: semi-infinite wedges, fermions and the boson-fermion map.
//! * [`hurwitz`]: closed/open partition functions and the permutation oracle.
//! * [`kp`]: Fay identity, Backlund-Darboux transformations, mKP checks.

pub mod error;
pub mod fock;
pub mod hurwitz;
pub mod kp;
pub mod series;
pub mod symfun;
pub mod verify;

pub use error::{Error, Result};
pub use series::{BetaScalar, Key, LaurentX, Rational, ShiftBase, SymSeries, TruncationProfile};
pub use symfun::Partition;
