use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::lattice::{Config, ParamSet, WaveKind};
use crate::ring::Field;
use crate::{Error, Result};

/// The four symmetric polynomial families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    G,
    Gbar,
    H,
    Hbar,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::G, Family::Gbar, Family::H, Family::Hbar];

    /// The wavefunction this family evaluates.
    pub fn wave_kind(self) -> WaveKind {
        match self {
            Family::G => WaveKind::Psi,
            Family::Gbar => WaveKind::PsiDual,
            Family::H => WaveKind::Phi,
            Family::Hbar => WaveKind::PhiDual,
        }
    }

    /// H and Hbar are indexed by hole configurations.
    pub fn uses_holes(self) -> bool {
        matches!(self, Family::H | Family::Hbar)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::G => "G",
            Family::Gbar => "Gbar",
            Family::H => "H",
            Family::Hbar => "Hbar",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "g" => Ok(Family::G),
            "gbar" | "g-bar" => Ok(Family::Gbar),
            "h" => Ok(Family::H),
            "hbar" | "h-bar" => Ok(Family::Hbar),
            _ => Err(format!("unknown family `{s}`")),
        }
    }
}

/// Linear forms in one spectral parameter.
pub(crate) struct Forms<F> {
    pub au_b: F,
    pub atu_b: F,
    pub eu_f: F,
    pub eu_tf: F,
    /// `(1-t)cu`
    pub cu: F,
    /// `(1-t)d`
    pub d: F,
}

impl<F: Field> Forms<F> {
    pub fn new(u: &F, p: &ParamSet<F>) -> Self {
        let omt = F::one() - &p.t;
        Forms {
            au_b: p.a.clone() * u + &p.b,
            atu_b: p.a.clone() * &p.t * u + &p.b,
            eu_f: p.e.clone() * u + &p.f,
            eu_tf: p.e.clone() * u + &(p.t.clone() * &p.f),
            cu: omt.clone() * &p.c * u,
            d: omt * &p.d,
        }
    }
}

pub(crate) fn check_distinct<F: Field>(us: &[F]) -> Result<()> {
    for (j, k) in (0..us.len()).tuple_combinations() {
        if us[j] == us[k] {
            return Err(Error::Coincident(format!("u{} = u{}", j + 1, k + 1)));
        }
    }
    Ok(())
}

/// `(lo - t*hi) / (t*lo - hi)`, or its reciprocal when `flip`.
fn inversion_factor<F: Field>(lo: &F, hi: &F, t: &F, flip: bool) -> Result<F> {
    let x = lo.clone() - &(t.clone() * hi);
    let y = t.clone() * lo - hi;
    Ok(if flip { y.try_div(&x)? } else { x.try_div(&y)? })
}

/// Closed form of a family polynomial as a permutation sum over `S_N`.
///
/// For `G`:
/// `Π_j (1-t)cu_j(au_j+b)^M/(eu_j+f) · Π_{j<k} (tu_j-u_k)/(u_j-u_k)
///  · Σ_σ Π_{j<k, σ(j)>σ(k)} (u_σ(k)-tu_σ(j))/(tu_σ(k)-u_σ(j))
///        · Π_j ((eu_σ(j)+f)/(au_σ(j)+b))^{x_j}`.
/// The other three families swap the linear forms and invert the two-body
/// factors. `config` lists holes for `H` and `Hbar`.
pub fn family_poly<F: Field>(kind: Family, config: &Config, us: &[F], p: &ParamSet<F>) -> Result<F> {
    let n = us.len();
    if config.len() != n {
        return Err(Error::Size(format!("{n} spectral parameters for {} sites", config.len())));
    }
    check_distinct(us)?;
    let m = config.m() as u32;
    let forms: Vec<Forms<F>> = us.iter().map(|u| Forms::new(u, p)).collect();

    // per-variable prefactor and ratio raised to the site positions
    let mut prefactor = F::one();
    let mut ratios = Vec::with_capacity(n);
    for l in &forms {
        let (pre, ratio) = match kind {
            Family::G => ((l.cu.clone() * &l.au_b.pow(m)).try_div(&l.eu_f)?, l.eu_f.try_div(&l.au_b)?),
            Family::Gbar => ((l.d.clone() * &l.eu_f.pow(m)).try_div(&l.au_b)?, l.au_b.try_div(&l.eu_f)?),
            Family::H => ((l.cu.clone() * &l.atu_b.pow(m)).try_div(&l.eu_tf)?, l.eu_tf.try_div(&l.atu_b)?),
            Family::Hbar => ((l.d.clone() * &l.eu_tf.pow(m)).try_div(&l.atu_b)?, l.atu_b.try_div(&l.eu_tf)?),
        };
        prefactor *= &pre;
        ratios.push(ratio);
    }
    // pair factors: G and Hbar use (tu_j-u_k), Gbar and H use (u_j-tu_k); H and Hbar add 1/t
    let t = &p.t;
    for (j, k) in (0..n).tuple_combinations() {
        let (uj, uk) = (&us[j], &us[k]);
        let num = match kind {
            Family::G | Family::Hbar => t.clone() * uj - uk,
            Family::Gbar | Family::H => uj.clone() - &(t.clone() * uk),
        };
        let mut den = uj.clone() - uk;
        if kind.uses_holes() {
            den *= t;
        }
        prefactor *= &num.try_div(&den)?;
    }

    let flip = matches!(kind, Family::Gbar | Family::H);
    // inv[hi][lo] for hi > lo
    let mut inv: Vec<Vec<F>> = vec![Vec::new(); n];
    for hi in 0..n {
        for lo in 0..hi {
            inv[hi].push(inversion_factor(&us[lo], &us[hi], t, flip)?);
        }
    }
    // powers[i][j] = ratio_i^{x_j}
    let powers: Vec<Vec<F>> = ratios.iter().map(|r| config.sites().iter().map(|&x| r.pow(x as u32)).collect()).collect();

    let mut sum = F::zero();
    for sigma in (0..n).permutations(n) {
        let mut term = F::one();
        for (j, k) in (0..n).tuple_combinations() {
            if sigma[j] > sigma[k] {
                term *= &inv[sigma[j]][sigma[k]];
            }
        }
        for (j, &s) in sigma.iter().enumerate() {
            term *= &powers[s][j];
        }
        sum += &term;
    }
    Ok(prefactor * &sum)
}
