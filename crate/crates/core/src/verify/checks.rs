use std::collections::BTreeMap;
use std::time::Instant;

use itertools::Itertools;
use rand::seq::index::sample;
use rayon::prelude::*;

use crate::dwbp::{check_ik_properties, z_det_hom, z_lattice};
use crate::lattice::{
    check_rll, check_ybe, mp_diagonalized, mp_operators, mp_prefactor, mp_trace_wavefunction, prefactor_closed_form,
    sample_point, symbolic_us, wave_state, wavefunction, Config, ParamSet, WaveKind,
};
use crate::ring::{random_rational, rng_for, Field, Matrix, RatFunc, Var};
use crate::sympoly::{degeneration_rhs, family_poly, interlaces, skew_factor, Family};
use crate::{Error, Result};

use super::report::{finish, CheckName, CheckReport, CheckSpec, Mode, Recorder};

/// Exhaustive enumeration up to this many configurations, seeded sample above.
pub const CONFIG_SAMPLE_LIMIT: usize = 500;

fn trial_seed(seed: u64, trial: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(trial as u64)
}

/// An identity evaluated at one parameter point.
trait Body: Sync {
    /// Number of spectral parameters drawn.
    fn arity(&self) -> usize;
    fn run<F: Field>(&self, p: &ParamSet<F>, us: &[F], rec: &mut Recorder) -> Result<()>;
}

/// Runs `body` once symbolically or at `trials` seeded points.
fn drive<B: Body>(spec: &CheckSpec, body: &B) -> Result<CheckReport> {
    let start = Instant::now();
    let recorders = match spec.mode {
        Mode::Exact => {
            let p = spec.params.as_ref().map_or_else(ParamSet::symbolic, ParamSet::lift);
            let mut rec = Recorder::new("exact");
            body.run(&p, &symbolic_us(body.arity()), &mut rec)?;
            vec![rec]
        }
        Mode::Eval => {
            if spec.trials == 0 {
                return Err(Error::InvalidConfig("eval mode needs at least one trial".into()));
            }
            (0..spec.trials)
                .into_par_iter()
                .map(|trial| {
                    let s = trial_seed(spec.seed, trial);
                    let (p, us) = sample_point(&mut rng_for(s), body.arity(), spec.params.as_ref())?;
                    let mut rec = Recorder::new(format!("trial {trial} (seed {s})"));
                    body.run(&p, &us, &mut rec)?;
                    Ok(rec)
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(finish(spec, recorders, start))
}

fn check_sizes(spec: &CheckSpec, need: bool, what: &str) -> Result<()> {
    if need {
        Ok(())
    } else {
        Err(Error::Size(format!("{} needs {what}, got M={}, N={}", spec.name, spec.m, spec.n)))
    }
}

/// All configurations of `n` particles on `m` sites, or a seeded sample of
/// [`CONFIG_SAMPLE_LIMIT`] of them in lexicographic order.
pub fn configs_for(m: usize, n: usize, seed: u64) -> Vec<Config> {
    let all = Config::all(m, n);
    if all.len() <= CONFIG_SAMPLE_LIMIT {
        return all;
    }
    let mut picked = sample(&mut rng_for(seed), all.len(), CONFIG_SAMPLE_LIMIT).into_vec();
    picked.sort_unstable();
    picked.into_iter().map(|i| all[i].clone()).collect()
}

struct Correspondence {
    configs: Vec<Config>,
    n: usize,
}

impl Body for Correspondence {
    fn arity(&self) -> usize {
        self.n
    }

    fn run<F: Field>(&self, p: &ParamSet<F>, us: &[F], rec: &mut Recorder) -> Result<()> {
        let Some(m) = self.configs.first().map(Config::m) else { return Ok(()) };
        for kind in Family::ALL {
            let state = wave_state(kind.wave_kind(), m, us, p);
            let rhs: Vec<F> = self.configs.par_iter().map(|x| family_poly(kind, x, us, p)).collect::<Result<_>>()?;
            for (x, rhs) in self.configs.iter().zip(&rhs) {
                let bits = if kind.uses_holes() { x.hole_bits() } else { x.bits() };
                rec.compare(|| format!("{kind} x={x}"), &state.get(bits), rhs);
            }
        }
        Ok(())
    }
}

/// Wavefunctions against the family polynomials, all four kinds.
pub fn check_correspondence(spec: &CheckSpec) -> Result<CheckReport> {
    check_sizes(spec, spec.n <= spec.m, "N <= M")?;
    drive(spec, &Correspondence { configs: configs_for(spec.m, spec.n, spec.seed), n: spec.n })
}

struct Pairing {
    m: usize,
    n: usize,
}

impl Body for Pairing {
    fn arity(&self) -> usize {
        self.m
    }

    fn run<F: Field>(&self, p: &ParamSet<F>, us: &[F], rec: &mut Recorder) -> Result<()> {
        let (m, n) = (self.m, self.n);
        let (holes_us, particles_us) = us.split_at(m - n);
        let configs = Config::all(m, n);
        for dual in [false, true] {
            let (particle, hole) = if dual { (Family::Gbar, Family::Hbar) } else { (Family::G, Family::H) };
            let mut det_route = F::zero();
            let mut completeness = F::zero();
            for x in &configs {
                let xbar = x.complement();
                det_route += &(family_poly(hole, &xbar, holes_us, p)? * &family_poly(particle, x, particles_us, p)?);
                completeness += &(wavefunction(hole.wave_kind(), &xbar, holes_us, p)?
                    * &wavefunction(particle.wave_kind(), x, particles_us, p)?);
            }
            let label = if dual { "dual" } else { "pairing" };
            rec.compare(|| format!("{label} determinant route"), &det_route, &z_det_hom(us, p, dual)?);
            rec.compare(|| format!("{label} completeness route"), &completeness, &z_lattice(us, None, p, dual)?);
        }
        Ok(())
    }
}

/// `Σ_x H_x̄ G_x = Z_M` and its dual, by the determinant and by inserting
/// a complete set of states.
pub fn check_pairing(spec: &CheckSpec) -> Result<CheckReport> {
    check_sizes(spec, spec.n <= spec.m && spec.m >= 1, "1 <= M and N <= M")?;
    drive(spec, &Pairing { m: spec.m, n: spec.n })
}

struct Branching {
    m: usize,
    n: usize,
}

impl Body for Branching {
    fn arity(&self) -> usize {
        self.n + 1
    }

    fn run<F: Field>(&self, p: &ParamSet<F>, us: &[F], rec: &mut Recorder) -> Result<()> {
        let (m, n) = (self.m, self.n);
        let smaller = Config::all(m, n);
        let last = &us[n];
        for kind in Family::ALL {
            let small: Vec<F> = smaller.par_iter().map(|x| family_poly(kind, x, &us[..n], p)).collect::<Result<_>>()?;
            for y in Config::all(m, n + 1) {
                let mut rhs = F::zero();
                let mut terms = 0;
                for (x, gx) in smaller.iter().zip(&small) {
                    if interlaces(y.sites(), x.sites()) {
                        rhs += &(skew_factor(kind, &y, x, last, p)? * gx);
                        terms += 1;
                    }
                }
                rec.record(terms > 0, || (format!("{kind} y={y}"), "no interlacing x".into(), String::new()));
                rec.compare(|| format!("{kind} y={y}"), &family_poly(kind, &y, &us[..=n], p)?, &rhs);
            }
        }
        Ok(())
    }
}

/// Family polynomials in `N+1` variables against the sum of skew factor
/// times `N`-variable polynomials over interlacing configurations.
pub fn check_branching(spec: &CheckSpec) -> Result<CheckReport> {
    check_sizes(spec, spec.n < spec.m, "N + 1 <= M")?;
    drive(spec, &Branching { m: spec.m, n: spec.n })
}

/// `G_x` at the Grothendieck specialization with `t → 0` against the
/// β-Grothendieck determinant. `t` is always symbolic; eval mode draws β
/// and the `u`'s.
pub fn check_degeneration(spec: &CheckSpec) -> Result<CheckReport> {
    check_sizes(spec, spec.n <= spec.m, "N <= M")?;
    let start = Instant::now();
    let symbolic = ParamSet::grothendieck();
    let beta = RatFunc::var(Var::BETA);
    let configs = configs_for(spec.m, spec.n, spec.seed);
    let run = |p: &ParamSet<RatFunc>, us: &[RatFunc], beta: &RatFunc, rec: &mut Recorder| -> Result<()> {
        let mut at_zero = BTreeMap::new();
        at_zero.insert(Var::T, RatFunc::zero());
        let rows: Vec<(RatFunc, RatFunc)> = configs
            .par_iter()
            .map(|x| Ok((family_poly(Family::G, x, us, p)?.substitute(&at_zero)?, degeneration_rhs(x, us, beta)?)))
            .collect::<Result<_>>()?;
        for (x, (lhs, rhs)) in configs.iter().zip(&rows) {
            rec.compare(|| format!("x={x}"), lhs, rhs);
        }
        Ok(())
    };
    let recorders = match spec.mode {
        Mode::Exact => {
            let mut rec = Recorder::new("exact");
            run(&symbolic, &symbolic_us(spec.n), &beta, &mut rec)?;
            vec![rec]
        }
        Mode::Eval => (0..spec.trials.max(1))
            .into_par_iter()
            .map(|trial| {
                let s = trial_seed(spec.seed, trial);
                let mut rng = rng_for(s);
                let b = RatFunc::constant(random_rational(&mut rng));
                let mut us: Vec<RatFunc> = Vec::with_capacity(spec.n);
                while us.len() < spec.n {
                    let u = RatFunc::constant(random_rational(&mut rng));
                    if !us.contains(&u) {
                        us.push(u);
                    }
                }
                let mut bind = BTreeMap::new();
                bind.insert(Var::BETA, b.clone());
                let p = symbolic.substitute(&bind)?;
                let mut rec = Recorder::new(format!("trial {trial} (seed {s})"));
                run(&p, &us, &b, &mut rec)?;
                Ok(rec)
            })
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(finish(spec, recorders, start))
}

struct MpAlgebra {
    m: usize,
    n: usize,
}

impl Body for MpAlgebra {
    fn arity(&self) -> usize {
        self.n
    }

    fn run<F: Field>(&self, p: &ParamSet<F>, us: &[F], rec: &mut Recorder) -> Result<()> {
        let n = self.n;
        let diag = mp_diagonalized(us, p)?;
        let (a, c) = mp_operators(us, p)?;
        let mat_eq = |x: &Matrix<F>, y: &Matrix<F>| x == y;
        let show = |x: &Matrix<F>| format!("{x:?}");
        rec.record(mat_eq(&diag.a_original(), &a), || ("A = G A' G^-1".into(), show(&diag.a_original()), show(&a)));
        rec.record(mat_eq(&diag.c_original(), &c), || ("C = G C' G^-1".into(), show(&diag.c_original()), show(&c)));

        let pieces = diag.pieces_original();
        let ratio: Vec<F> = us
            .iter()
            .map(|u| (p.e.clone() * u + &p.f).try_div(&(p.a.clone() * u + &p.b)))
            .collect::<std::result::Result<_, _>>()?;
        let zero = Matrix::zeros(a.rows(), a.cols());
        for (j, cj) in pieces.iter().enumerate() {
            let lhs = cj.mul(&a)?;
            let rhs = a.mul(cj)?.scale(&ratio[j]);
            rec.record(lhs == rhs, || (format!("C({}) A = r A C({})", j + 1, j + 1), show(&lhs), show(&rhs)));
            let sq = cj.mul(cj)?;
            rec.record(sq == zero, || (format!("C({})^2 = 0", j + 1), show(&sq), show(&zero)));
        }
        for (j, k) in (0..n).tuple_combinations() {
            let (uj, uk) = (&us[j], &us[k]);
            let coeff = (ratio[j].clone() * &(uj.clone() - &(p.t.clone() * uk)))
                .try_div(&(ratio[k].clone() * &(p.t.clone() * uj - uk)))?;
            let lhs = pieces[j].mul(&pieces[k])?;
            let rhs = pieces[k].mul(&pieces[j])?.scale(&coeff);
            rec.record(lhs == rhs, || (format!("C({}) C({}) exchange", j + 1, k + 1), show(&lhs), show(&rhs)));
        }

        if self.m >= n {
            let configs = Config::all(self.m, n);
            let rows: Vec<(F, F)> = configs
                .par_iter()
                .map(|x| Ok((mp_trace_wavefunction(x, us, p)?, wavefunction(WaveKind::Psi, x, us, p)?)))
                .collect::<Result<_>>()?;
            for (x, (lhs, rhs)) in configs.iter().zip(&rows) {
                rec.compare(|| format!("trace x={x}"), lhs, rhs);
            }
            rec.compare(|| format!("K at M={}", self.m), &mp_prefactor(self.m, us, p)?, &prefactor_closed_form(self.m, us, p)?);
        }
        Ok(())
    }
}

/// Exchange relations of the column operators, the trace formula for the
/// wavefunction, and the prefactor `K`.
pub fn check_mp_algebra(spec: &CheckSpec) -> Result<CheckReport> {
    check_sizes(spec, (1..=5).contains(&spec.n), "1 <= N <= 5")?;
    drive(spec, &MpAlgebra { m: spec.m, n: spec.n })
}

/// The four defining properties of `Z_N(u|w)` with `N = spec.n`. Both modes
/// run on numeric points; the degree part is symbolic in `w_N` regardless.
pub fn check_ik(spec: &CheckSpec) -> Result<CheckReport> {
    check_sizes(spec, spec.n >= 2, "N >= 2")?;
    let start = Instant::now();
    let trials = if spec.mode == Mode::Exact { 1 } else { spec.trials.max(1) };
    let recorders = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let s = trial_seed(spec.seed, trial);
            let p = spec.params.clone().unwrap_or_else(|| ParamSet::sample(s));
            let report = check_ik_properties(spec.n, &p, s)?;
            let mut rec = Recorder::new(format!("trial {trial} (seed {s})"));
            let bool_text = |b: bool| (b.to_string(), "true".to_string());
            for (what, ok) in [("degree in w_N", report.degree), ("symmetry", report.symmetry), ("base case", report.base)] {
                rec.record(ok, || {
                    let (l, r) = bool_text(ok);
                    (what.into(), l, r)
                });
            }
            for (k, &ok) in report.recursion.iter().enumerate() {
                rec.record(ok, || (format!("recursion at w_N = -a u_{} / b", k + 1), "false".into(), "true".into()));
            }
            Ok(rec)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(finish(spec, recorders, start))
}

struct Structural {
    ybe: bool,
}

impl Body for Structural {
    fn arity(&self) -> usize {
        2
    }

    fn run<F: Field>(&self, p: &ParamSet<F>, us: &[F], rec: &mut Recorder) -> Result<()> {
        let ok = if self.ybe { check_ybe(&us[0], &us[1], p)? } else { check_rll(&us[0], &us[1], p)? };
        let what = if self.ybe { "R12 R13 R23 = R23 R13 R12" } else { "R L L = L L R" };
        rec.record(ok, || (what.into(), "differs".into(), String::new()));
        Ok(())
    }
}

pub fn check_rll_spec(spec: &CheckSpec) -> Result<CheckReport> {
    drive(spec, &Structural { ybe: false })
}

pub fn check_ybe_spec(spec: &CheckSpec) -> Result<CheckReport> {
    drive(spec, &Structural { ybe: true })
}

/// Dispatches on `spec.name`.
pub fn run_check(spec: &CheckSpec) -> Result<CheckReport> {
    match spec.name {
        CheckName::Correspondence => check_correspondence(spec),
        CheckName::Pairing => check_pairing(spec),
        CheckName::Branching => check_branching(spec),
        CheckName::Degeneration => check_degeneration(spec),
        CheckName::MpAlgebra => check_mp_algebra(spec),
        CheckName::IkProperties => check_ik(spec),
        CheckName::Rll => check_rll_spec(spec),
        CheckName::Ybe => check_ybe_spec(spec),
    }
}

/// Every check at the sizes of `base`, in [`CheckName::ALL`] order. Checks
/// whose size preconditions `base` does not meet are skipped.
pub fn run_all(base: &CheckSpec) -> Result<Vec<CheckReport>> {
    let (m, n) = (base.m, base.n);
    let applicable = |name: CheckName| match name {
        CheckName::Correspondence | CheckName::Pairing | CheckName::Degeneration => n <= m,
        CheckName::Branching => n < m,
        CheckName::MpAlgebra => (1..=5).contains(&n),
        CheckName::IkProperties => n >= 2,
        CheckName::Rll | CheckName::Ybe => true,
    };
    let specs: Vec<CheckSpec> =
        CheckName::ALL.into_iter().filter(|&c| applicable(c)).map(|name| CheckSpec { name, ..base.clone() }).collect();
    specs.par_iter().map(run_check).collect()
}
