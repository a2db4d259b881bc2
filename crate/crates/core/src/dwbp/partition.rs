use itertools::Itertools;
use rand::Rng;

use crate::lattice::{wavefunction, Config, ParamSet, WaveKind};
use crate::ring::{random_point_with, BigRational, Field, Matrix, MultiPoly, Var};
use crate::{Error, Result};

fn check_sizes<F>(us: &[F], ws: Option<&[F]>) -> Result<()> {
    if us.is_empty() {
        return Err(Error::Size("need at least one spectral parameter".into()));
    }
    match ws {
        Some(ws) if ws.len() != us.len() => Err(Error::Size(format!("{} us but {} ws", us.len(), ws.len()))),
        _ => Ok(()),
    }
}

fn check_distinct<F: Field>(xs: &[F], name: &str) -> Result<()> {
    for (j, k) in (0..xs.len()).tuple_combinations() {
        if xs[j] == xs[k] {
            return Err(Error::Coincident(format!("{name}{} = {name}{}", j + 1, k + 1)));
        }
    }
    Ok(())
}

fn ws_or_ones<F: Field>(n: usize, ws: Option<&[F]>) -> Vec<F> {
    ws.map(<[F]>::to_vec).unwrap_or_else(|| vec![F::one(); n])
}

/// `Π_{j<k} (x_j - x_k)`.
fn vandermonde<F: Field>(xs: &[F]) -> F {
    let mut out = F::one();
    for (j, k) in (0..xs.len()).tuple_combinations() {
        out *= &(xs[j].clone() - &xs[k]);
    }
    out
}

/// Domain-wall partition function as a sum over `S_N`:
///
/// `Z_N = Π_j (1-t)cu_j · Π_{j<k} (tu_j-u_k)/(u_j-u_k)
///   · Σ_σ Π_{j<k, σ(j)>σ(k)} (u_σ(k)-tu_σ(j))/(tu_σ(k)-u_σ(j))
///        · Π_{j<k} (au_σ(j)+bw_k) · Π_{k<j} (eu_σ(j)+fw_k)`.
///
/// `ws = None` is the homogeneous case `w_k = 1`.
pub fn z_sum<F: Field>(us: &[F], ws: Option<&[F]>, p: &ParamSet<F>) -> Result<F> {
    check_sizes(us, ws)?;
    check_distinct(us, "u")?;
    let n = us.len();
    let ws = ws_or_ones(n, ws);
    let t = &p.t;
    let omt = F::one() - t;

    let mut prefactor = F::one();
    for u in us {
        prefactor *= &(omt.clone() * &p.c * u);
    }
    for (j, k) in (0..n).tuple_combinations() {
        prefactor *= &(t.clone() * &us[j] - &us[k]).try_div(&(us[j].clone() - &us[k]))?;
    }

    // upper[i][k] = au_i + bw_k, lower[i][k] = eu_i + fw_k
    let upper: Vec<Vec<F>> = us.iter().map(|u| ws.iter().map(|w| p.a.clone() * u + &(p.b.clone() * w)).collect()).collect();
    let lower: Vec<Vec<F>> = us.iter().map(|u| ws.iter().map(|w| p.e.clone() * u + &(p.f.clone() * w)).collect()).collect();
    let mut inv: Vec<Vec<F>> = vec![Vec::new(); n];
    for hi in 0..n {
        for lo in 0..hi {
            let (ul, uh) = (&us[lo], &us[hi]);
            inv[hi].push((ul.clone() - &(t.clone() * uh)).try_div(&(t.clone() * ul - uh))?);
        }
    }

    let mut sum = F::zero();
    for sigma in (0..n).permutations(n) {
        let mut term = F::one();
        for (j, k) in (0..n).tuple_combinations() {
            if sigma[j] > sigma[k] {
                term *= &inv[sigma[j]][sigma[k]];
            }
            term *= &upper[sigma[j]][k];
            term *= &lower[sigma[k]][j];
        }
        sum += &term;
    }
    Ok(prefactor * &sum)
}

/// Izergin-Korepin determinant form.
///
/// `Z_N = Π_j (1-t)cu_j Π_{j,k} (au_j+bw_k)(eu_j+fw_k)
///   / ((cd)^{N(N-1)/2} Π_{j<k} (u_j-u_k)(w_k-w_j))
///   · det(1/((au_j+bw_k)(eu_j+fw_k)))`.
///
/// The dual uses `(1-t)dw_j`, `atu_j+bw_k`, `eu_j+tfw_k` and `(t²cd)^{N(N-1)/2}`.
pub fn z_det_inhom<F: Field>(us: &[F], ws: Option<&[F]>, p: &ParamSet<F>, dual: bool) -> Result<F> {
    check_sizes(us, ws)?;
    check_distinct(us, "u")?;
    let n = us.len();
    let ws = ws_or_ones(n, ws);
    if n > 1 {
        check_distinct(&ws, "w")?;
    }
    let t = &p.t;
    let omt = F::one() - t;
    let (bt, ft) = if dual { (p.a.clone() * t, t.clone() * &p.f) } else { (p.a.clone(), p.f.clone()) };
    let entry: Vec<Vec<F>> = us
        .iter()
        .map(|u| ws.iter().map(|w| (bt.clone() * u + &(p.b.clone() * w)) * &(p.e.clone() * u + &(ft.clone() * w))).collect())
        .collect();

    // Π_{j,k} x_jk · det(1/x_jk) = det(Π_{l≠k} x_jl), which stays polynomial.
    let cleared = Matrix::from_fn(n, n, |j, k| {
        let mut out = F::one();
        for (l, x) in entry[j].iter().enumerate() {
            if l != k {
                out *= x;
            }
        }
        out
    });
    let mut out = cleared.determinant()?;
    for j in 0..n {
        out *= &(omt.clone() * &if dual { p.d.clone() * &ws[j] } else { p.c.clone() * &us[j] });
    }
    let pairs = (n * (n - 1) / 2) as u32;
    let mut cd = p.c.clone() * &p.d;
    if dual {
        cd *= &t.pow(2);
    }
    let mut den = cd.pow(pairs) * &vandermonde(us);
    for (j, k) in (0..n).tuple_combinations() {
        den *= &(ws[k].clone() - &ws[j]);
    }
    Ok(out.try_div(&den)?)
}

/// Homogeneous limit `w_k → 1` of the determinant form:
///
/// `det((au_j+b)^N(-f)^k(eu_j+f)^{N-k} - (eu_j+f)^N(-b)^k(au_j+b)^{N-k})
///   / (c^{N(N-1)/2} d^{N(N+1)/2} Π_{j<k} (u_j-u_k))`, `k = 1..N`.
///
/// The dual is
/// `det((eu_j+tf)^N(-b)^k(atu_j+b)^{N-k} - (atu_j+b)^N(-tf)^k(eu_j+tf)^{N-k})
///   / (t^{N²} c^{N(N+1)/2} d^{N(N-1)/2} Π u_j Π_{j<k} (u_j-u_k))`.
pub fn z_det_hom<F: Field>(us: &[F], p: &ParamSet<F>, dual: bool) -> Result<F> {
    check_sizes(us, None)?;
    check_distinct(us, "u")?;
    let n = us.len();
    let t = &p.t;
    let (x, y, mx, my): (Vec<F>, Vec<F>, F, F) = if dual {
        (
            us.iter().map(|u| p.e.clone() * u + &(t.clone() * &p.f)).collect(),
            us.iter().map(|u| p.a.clone() * t * u + &p.b).collect(),
            -p.b.clone(),
            -(t.clone() * &p.f),
        )
    } else {
        (
            us.iter().map(|u| p.a.clone() * u + &p.b).collect(),
            us.iter().map(|u| p.e.clone() * u + &p.f).collect(),
            -p.f.clone(),
            -p.b.clone(),
        )
    };
    // row j, column k (1-based): x^N mx^k y^{N-k} - y^N my^k x^{N-k}
    let m = Matrix::from_fn(n, n, |j, col| {
        let k = col as u32 + 1;
        let nn = n as u32;
        x[j].pow(nn) * &mx.pow(k) * &y[j].pow(nn - k) - &(y[j].pow(nn) * &my.pow(k) * &x[j].pow(nn - k))
    });
    let det = m.determinant()?;
    let pairs = (n * (n - 1) / 2) as u32;
    let plus = (n * (n + 1) / 2) as u32;
    let scale = if dual {
        let mut s = t.pow((n * n) as u32) * &p.c.pow(plus) * &p.d.pow(pairs);
        for u in us {
            s *= u;
        }
        s
    } else {
        p.c.pow(pairs) * &p.d.pow(plus)
    };
    if scale.is_zero() {
        return Err(Error::Constraint("c, d, t and the spectral parameters must be nonzero".into()));
    }
    Ok(det.exact_quotient(&vandermonde(us))? * &scale.try_inv()?)
}

/// Lattice contraction on `N` sites with inhomogeneities `ws`:
/// `⟨1⋯N|B(u_1)⋯B(u_N)|Ω⟩`, or `⟨Ω|C(u_N)⋯C(u_1)|1⋯N⟩` for the dual.
pub fn z_lattice<F: Field>(us: &[F], ws: Option<&[F]>, p: &ParamSet<F>, dual: bool) -> Result<F> {
    check_sizes(us, ws)?;
    let n = us.len();
    let p = match ws {
        Some(ws) => p.clone().with_w(ws.to_vec()),
        None => p.homogeneous(),
    };
    let kind = if dual { WaveKind::PsiDual } else { WaveKind::Psi };
    wavefunction(kind, &Config::full(n), us, &p)
}

/// Seeded pairwise distinct nonzero inhomogeneities `w_1..w_n`.
pub fn sample_ws<R: Rng>(rng: &mut R, n: usize) -> Result<Vec<BigRational>> {
    let vars: Vec<Var> = (1..=n).map(Var::w).collect();
    let mut avoid: Vec<MultiPoly> = vars.iter().map(|&v| MultiPoly::var(v)).collect();
    for (j, k) in (0..n).tuple_combinations() {
        avoid.push(&MultiPoly::var(vars[j]) - &MultiPoly::var(vars[k]));
    }
    let point = random_point_with(rng, &vars, &avoid)?;
    Ok(vars.iter().map(|v| point[v].clone()).collect())
}
