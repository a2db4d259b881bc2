use rand::seq::SliceRandom;
use serde::Serialize;

use crate::lattice::{sample_point, ParamSet};
use crate::ring::{rng_for, BigRational, Field, RatFunc, Var};
use crate::{Error, Result};

use super::partition::{sample_ws, z_sum};

/// Outcome of the four defining properties of `Z_N(u|w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IkReport {
    pub n: usize,
    /// Degree `N-1` in `w_N`.
    pub degree: bool,
    /// Invariance under a random transposition of the `u`'s.
    pub symmetry: bool,
    /// `Z_1 = (1-t)cu_1`.
    pub base: bool,
    /// Recursion at `w_N = -au_k/b`, indexed by `k - 1`.
    pub recursion: Vec<bool>,
}

impl IkReport {
    pub fn all_pass(&self) -> bool {
        self.degree && self.symmetry && self.base && self.recursion.iter().all(|&r| r)
    }
}

/// Checks degree, symmetry, base case and the recursion
/// `Z_N|_{w_N=-au_k/b} = (1-t)c a^{N-1} u_k Π_{j≠k}(tu_j-u_k) Π_{j<N}(eu_k+fw_j)
///   · Z_{N-1}(u \ u_k | w_1..w_{N-1})`
/// at a seeded point.
pub fn check_ik_properties(n: usize, p: &ParamSet<BigRational>, seed: u64) -> Result<IkReport> {
    check_ik_properties_against(n, p, p, seed)
}

/// As [`check_ik_properties`], but the right-hand side of the recursion is
/// built from `rhs` instead of `p`. A mismatch there must surface as a
/// failed recursion entry.
pub fn check_ik_properties_against(
    n: usize,
    p: &ParamSet<BigRational>,
    rhs: &ParamSet<BigRational>,
    seed: u64,
) -> Result<IkReport> {
    if n < 2 {
        return Err(Error::Size(format!("IK properties need n >= 2, got {n}")));
    }
    p.validate()?;
    let mut rng = rng_for(seed);
    let (_, us) = sample_point(&mut rng, n, Some(p))?;
    let ws = sample_ws(&mut rng, n)?;

    let degree = degree_in_last_w(&us, &ws, p)? == Some(n as u32 - 1);

    let z = z_sum(&us, Some(&ws), p)?;
    let mut swapped = us.clone();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(&mut rng);
    swapped.swap(idx[0], idx[1]);
    let symmetry = z_sum(&swapped, Some(&ws), p)? == z;

    let omt = BigRational::from_integer(1.into()) - &p.t;
    let base = z_sum(&us[..1], Some(&ws[..1]), p)? == omt.clone() * &p.c * &us[0];

    let mut recursion = Vec::with_capacity(n);
    for k in 0..n {
        let mut at_root = ws.clone();
        at_root[n - 1] = -(p.a.clone() * &us[k]) / &p.b;
        let lhs = z_sum(&us, Some(&at_root), p)?;

        let rest: Vec<BigRational> = us.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, u)| u.clone()).collect();
        let uk = &us[k];
        let mut factor = (BigRational::from_integer(1.into()) - &rhs.t) * &rhs.c * &Field::pow(&rhs.a, n as u32 - 1) * uk;
        for u in &rest {
            factor *= rhs.t.clone() * u - uk;
        }
        for w in &ws[..n - 1] {
            factor *= rhs.e.clone() * uk + &(rhs.f.clone() * w);
        }
        recursion.push(lhs == factor * &z_sum(&rest, Some(&ws[..n - 1]), p)?);
    }
    Ok(IkReport { n, degree, symmetry, base, recursion })
}

/// Degree of `Z_N` in a symbolic `w_N`, all other inputs fixed.
fn degree_in_last_w(us: &[BigRational], ws: &[BigRational], p: &ParamSet<BigRational>) -> Result<Option<u32>> {
    let n = us.len();
    let lift = |x: &BigRational| RatFunc::constant(x.clone());
    let us: Vec<RatFunc> = us.iter().map(lift).collect();
    let mut ws: Vec<RatFunc> = ws.iter().map(lift).collect();
    ws[n - 1] = RatFunc::var(Var::w(n));
    let z = z_sum(&us, Some(&ws), &p.lift())?;
    Ok(z.poly_degree_in(Var::w(n)))
}
