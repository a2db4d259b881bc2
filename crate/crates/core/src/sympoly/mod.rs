//! Closed forms: the symmetric families `G, Gbar, H, Hbar`, their
//! one-variable skew factors, Young-diagram translation, and the
//! β-Grothendieck determinant.

mod family;
mod grothendieck;
mod skew;

pub use family::{family_poly, Family};
pub use grothendieck::{degeneration_rhs, grothendieck_det, YoungDiagram};
pub use skew::{interlaces, skew_factor, skew_from_lattice};
