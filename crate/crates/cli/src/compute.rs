use std::collections::BTreeMap;

use num_rational::BigRational;
use serde_json::json;
use vertexpoly::dwbp::{z_det_hom, z_sum};
use vertexpoly::lattice::{sample_point, symbolic_us, wavefunction, Config, ParamSet, WaveKind};
use vertexpoly::ring::json::parse_rational;
use vertexpoly::ring::{random_rational, rng_for, Field, RatFunc, Scalar, Var};
use vertexpoly::sympoly::{degeneration_rhs, family_poly, skew_factor, Family};
use vertexpoly::verify::Mode;

use crate::{CliError, Format, Quantity};

#[derive(Debug)]
pub struct Request {
    pub what: Quantity,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub x: Option<Vec<usize>>,
    pub xbar: Option<Vec<usize>>,
    pub y: Option<Vec<usize>>,
    pub u: Option<Vec<String>>,
    pub kind: Option<String>,
    pub dual: bool,
    pub mode: Mode,
    pub seed: u64,
}

/// What to evaluate once the scalar field is fixed.
enum Job {
    Wave(WaveKind, Config),
    Family(Family, Config),
    Sum(usize),
    Det(usize, bool),
    Skew(Family, Config, Config),
    Grothendieck(Config),
}

impl Job {
    fn arity(&self) -> usize {
        match self {
            Job::Wave(_, c) | Job::Family(_, c) | Job::Grothendieck(c) => c.len(),
            Job::Sum(n) | Job::Det(n, _) => *n,
            Job::Skew(..) => 1,
        }
    }

    fn eval<F: Field>(&self, us: &[F], p: &ParamSet<F>) -> vertexpoly::Result<F> {
        match self {
            Job::Wave(kind, c) => wavefunction(*kind, c, us, p),
            Job::Family(kind, c) => family_poly(*kind, c, us, p),
            Job::Sum(_) => z_sum(us, None, p),
            Job::Det(_, dual) => z_det_hom(us, p, *dual),
            Job::Skew(kind, y, x) => skew_factor(*kind, y, x, &us[0], p),
            Job::Grothendieck(_) => unreachable!("evaluated separately"),
        }
    }
}

fn need<T>(v: Option<T>, flag: &str, what: Quantity) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{what:?} needs --{flag}").to_lowercase()))
}

fn config(m: usize, sites: Vec<usize>) -> Result<Config, CliError> {
    Ok(Config::new(m, sites)?)
}

/// The configuration indexing a family or wavefunction: holes for the hole
/// kinds (`--xbar`, or the complement of `--x`), particles otherwise.
fn indexing_config(holes: bool, m: usize, x: Option<Vec<usize>>, xbar: Option<Vec<usize>>) -> Result<Config, CliError> {
    match (holes, x, xbar) {
        (_, Some(_), Some(_)) => Err(CliError::Usage("give only one of --x and --xbar".into())),
        (true, Some(x), None) => Ok(config(m, x)?.complement()),
        (true, None, Some(xbar)) => config(m, xbar),
        (false, Some(x), None) => config(m, x),
        (false, None, Some(_)) => Err(CliError::Usage("--xbar applies to hole kinds only".into())),
        (_, None, None) => Err(CliError::Usage("missing --x".into())),
    }
}

fn build_job(req: &Request) -> Result<Job, CliError> {
    let what = req.what;
    let kind = || need(req.kind.clone(), "kind", what);
    Ok(match what {
        Quantity::Wavefunction => {
            let kind: WaveKind = kind()?.parse().map_err(CliError::Usage)?;
            let m = need(req.m, "m", what)?;
            Job::Wave(kind, indexing_config(kind.uses_holes(), m, req.x.clone(), req.xbar.clone())?)
        }
        Quantity::Family => {
            let kind: Family = kind()?.parse().map_err(CliError::Usage)?;
            let m = need(req.m, "m", what)?;
            Job::Family(kind, indexing_config(kind.uses_holes(), m, req.x.clone(), req.xbar.clone())?)
        }
        Quantity::DwbpSum | Quantity::DwbpDet => {
            let n = need(req.n, "n", what)?;
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            if what == Quantity::DwbpSum {
                if req.dual {
                    return Err(CliError::Usage("the dual partition function has no sum form; use dwbp-det --dual".into()));
                }
                Job::Sum(n)
            } else {
                Job::Det(n, req.dual)
            }
        }
        Quantity::Skew => {
            let kind: Family = kind()?.parse().map_err(CliError::Usage)?;
            let m = need(req.m, "m", what)?;
            let y = config(m, need(req.y.clone(), "y", what)?)?;
            let x = config(m, need(req.x.clone(), "x", what)?)?;
            if y.len() != x.len() + 1 {
                return Err(CliError::Usage("--y must have exactly one more entry than --x".into()));
            }
            Job::Skew(kind, y, x)
        }
        Quantity::Grothendieck => {
            let m = need(req.m, "m", what)?;
            Job::Grothendieck(config(m, need(req.x.clone(), "x", what)?)?)
        }
    })
}

fn rationals(xs: &[BigRational]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn params_json(p: &ParamSet<BigRational>) -> serde_json::Value {
    json!({
        "t": p.t.to_string(), "a": p.a.to_string(), "b": p.b.to_string(), "c": p.c.to_string(),
        "d": p.d.to_string(), "e": p.e.to_string(), "f": p.f.to_string(),
    })
}

fn render(what: Quantity, value: Scalar, point: Option<serde_json::Value>, format: Format) -> String {
    match format {
        Format::Text => value.to_text(),
        Format::Json => {
            let name = format!("{what:?}");
            let mut out = json!({ "quantity": kebab(&name), "result": value.to_json() });
            if let Some(point) = point {
                out["point"] = point;
            }
            out.to_string()
        }
    }
}

fn kebab(camel: &str) -> String {
    let mut s = String::new();
    for (i, ch) in camel.chars().enumerate() {
        if ch.is_ascii_uppercase() && i > 0 {
            s.push('-');
        }
        s.push(ch.to_ascii_lowercase());
    }
    s
}

/// `--u` values, checked against the number of spectral parameters needed.
fn explicit_us(req: &Request, k: usize) -> Result<Option<Vec<BigRational>>, CliError> {
    let Some(raw) = &req.u else { return Ok(None) };
    if req.mode == Mode::Exact {
        return Err(CliError::Usage("--u gives numeric values and cannot be combined with symbolic output".into()));
    }
    if raw.len() != k {
        return Err(CliError::Usage(format!("--u has {} values, {k} needed", raw.len())));
    }
    let us = raw.iter().map(|s| parse_rational(s).map_err(|e| CliError::Usage(e.to_string()))).collect::<Result<_, _>>()?;
    Ok(Some(us))
}

pub fn run(req: &Request, params: Option<&ParamSet<BigRational>>, format: Format) -> Result<String, CliError> {
    let job = build_job(req)?;
    if let Job::Grothendieck(x) = &job {
        return grothendieck(req, x, format);
    }
    let k = job.arity();
    match req.mode {
        Mode::Exact => {
            explicit_us(req, k)?;
            let p = params.map_or_else(ParamSet::symbolic, ParamSet::lift);
            let value = job.eval(&symbolic_us(k), &p)?;
            Ok(render(req.what, Scalar::Exact(value), None, format))
        }
        Mode::Eval => {
            let fixed = explicit_us(req, k)?;
            let (p, us) = match (fixed, params) {
                (Some(us), Some(p)) => (p.clone(), us),
                (Some(us), None) => (sample_point(&mut rng_for(req.seed), 0, None)?.0, us),
                (None, _) => sample_point(&mut rng_for(req.seed), k, params)?,
            };
            let value = job.eval(&us, &p)?;
            let point = json!({ "params": params_json(&p), "us": rationals(&us) });
            Ok(render(req.what, Scalar::Eval(value), Some(point), format))
        }
    }
}

/// The Grothendieck side of the `t = 0` correspondence for `G_x`.
fn grothendieck(req: &Request, x: &Config, format: Format) -> Result<String, CliError> {
    let n = x.len();
    match req.mode {
        Mode::Exact => {
            explicit_us(req, n)?;
            let value = degeneration_rhs(x, &symbolic_us(n), &RatFunc::var(Var::BETA))?;
            Ok(render(req.what, Scalar::Exact(value), None, format))
        }
        Mode::Eval => {
            let mut rng = rng_for(req.seed);
            let beta = random_rational(&mut rng);
            let mut us: Vec<BigRational> = explicit_us(req, n)?.unwrap_or_default();
            while us.len() < n {
                let u = random_rational(&mut rng);
                if !us.contains(&u) {
                    us.push(u);
                }
            }
            let value = degeneration_rhs(x, &us, &beta)?;
            let mut point = BTreeMap::new();
            point.insert("beta", json!(beta.to_string()));
            point.insert("us", json!(rationals(&us)));
            Ok(render(req.what, Scalar::Eval(value), Some(json!(point)), format))
        }
    }
}
