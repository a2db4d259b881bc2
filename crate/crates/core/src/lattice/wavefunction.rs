use std::fmt;
use std::str::FromStr;

use crate::ring::Field;
use crate::{Error, Result};

use super::{apply_row_operator, apply_row_operator_bra, Config, ParamSet, RowOp, StateVector};

/// The four overlaps between `N`-particle (or `N`-hole) states and basis
/// configurations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WaveKind {
    /// `⟨x|B(u_N)⋯B(u_1)|Ω⟩`
    Psi,
    /// `⟨Ω|C(u_1)⋯C(u_N)|x⟩`
    PsiDual,
    /// `⟨1⋯M|B(u_1)⋯B(u_N)|x̄⟩`
    Phi,
    /// `⟨x̄|C(u_N)⋯C(u_1)|1⋯M⟩`
    PhiDual,
}

impl WaveKind {
    pub const ALL: [WaveKind; 4] = [WaveKind::Psi, WaveKind::PsiDual, WaveKind::Phi, WaveKind::PhiDual];

    /// Whether the configuration lists holes rather than particles.
    pub fn uses_holes(self) -> bool {
        matches!(self, WaveKind::Phi | WaveKind::PhiDual)
    }

    pub fn name(self) -> &'static str {
        match self {
            WaveKind::Psi => "psi",
            WaveKind::PsiDual => "psi-dual",
            WaveKind::Phi => "phi",
            WaveKind::PhiDual => "phi-dual",
        }
    }
}

impl fmt::Display for WaveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WaveKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "psi" => Ok(WaveKind::Psi),
            "psi-dual" => Ok(WaveKind::PsiDual),
            "phi" => Ok(WaveKind::Phi),
            "phi-dual" => Ok(WaveKind::PhiDual),
            _ => Err(format!("unknown wavefunction kind `{s}`")),
        }
    }
}

/// The full state behind a wavefunction kind: a ket for `Psi`/`PhiDual`, the
/// coefficients of a bra for `PsiDual`/`Phi`.
pub fn wave_state<F: Field>(kind: WaveKind, m: usize, us: &[F], p: &ParamSet<F>) -> StateVector<F> {
    match kind {
        WaveKind::Psi => us.iter().fold(StateVector::vacuum(m), |s, u| apply_row_operator(RowOp::B, u, &s, p)),
        WaveKind::PsiDual => us.iter().fold(StateVector::vacuum(m), |s, u| apply_row_operator_bra(RowOp::C, u, &s, p)),
        WaveKind::Phi => us.iter().fold(StateVector::filled(m), |s, u| apply_row_operator_bra(RowOp::B, u, &s, p)),
        WaveKind::PhiDual => us.iter().fold(StateVector::filled(m), |s, u| apply_row_operator(RowOp::C, u, &s, p)),
    }
}

/// Wavefunction by direct operator application on the lattice. `config`
/// holds particle positions for `Psi`/`PsiDual` and hole positions for
/// `Phi`/`PhiDual`.
pub fn wavefunction<F: Field>(kind: WaveKind, config: &Config, us: &[F], p: &ParamSet<F>) -> Result<F> {
    if us.len() != config.len() {
        return Err(Error::Size(format!("{} spectral parameters for {} sites", us.len(), config.len())));
    }
    let state = wave_state(kind, config.m(), us, p);
    let bits = if kind.uses_holes() { config.hole_bits() } else { config.bits() };
    Ok(state.get(bits))
}
