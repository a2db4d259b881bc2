//! Domain-wall partition functions `Z_N(u|w)`: the permutation sum, the
//! Izergin-Korepin determinant and its homogeneous limit, the duals, and
//! the defining-property checks.

mod ik;
mod partition;

pub use ik::{check_ik_properties, check_ik_properties_against, IkReport};
pub use partition::{sample_ws, z_det_hom, z_det_inhom, z_lattice, z_sum};
