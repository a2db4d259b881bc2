//! The six-vertex model: local weights, RLL and Yang-Baxter checks, row
//! operators on the `2^M`-dimensional quantum space, wavefunctions, and the
//! column (matrix-product) picture.
//!
//! Site `j` of a basis state is bit `j-1`. The monodromy is
//! `T_a(u) = L_{aM}(u) ⋯ L_{a1}(u)`, so a row sweep visits sites `1..M` in
//! that order while carrying the auxiliary bit.

mod mp;
mod params;
mod state;
mod wavefunction;
mod weights;

pub use mp::{
    mp_diagonalized, mp_operators, mp_prefactor, mp_recursion_step, mp_trace_wavefunction, prefactor_closed_form,
    MpDiagonal,
};
pub use params::{sample_point, standard_avoid, symbolic_us, ParamSet};
pub use state::{
    apply_row_operator, apply_row_operator_bra, matrix_element, operator_matrix, Config, RowOp, StateVector, MAX_SITES,
};
pub use wavefunction::{wave_state, wavefunction, WaveKind};
pub use weights::{check_rll, check_ybe, check_ybe_with, l_weight, r_weight, rll_defect};
