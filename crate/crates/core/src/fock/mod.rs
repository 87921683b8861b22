//! Truncated semi-infinite wedge space: basis states `v_lambda^{[N]}`,
//! fermions, bosonic modes, the boson-fermion map, and wedge states built
//! from rows of an adapted basis.

mod rows;
mod state;

pub use rows::{
    det_series,
    cutjoin_deform_rows, exp_row, graded, wedge_from_rows, wedge_reduce_exp_row, LaurentRow, QSlot, Rows,
    TailRule,
};
pub use state::{
    alpha_apply, alpha_apply_fermionic, boson_fermion, boson_fermion_vertex, canonicalize, exponents,
    fermion_apply, Fermion, WedgeState,
};
