use crate::lattice::Config;
use crate::ring::{Field, Matrix};
use crate::{Error, Result};

use super::family::check_distinct;

/// Partition `λ_1 ≥ … ≥ λ_N ≥ 0` with `λ_1 ≤ M - N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YoungDiagram {
    lambda: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(lambda: Vec<usize>) -> Result<Self> {
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidConfig(format!("{lambda:?} is not weakly decreasing")));
        }
        Ok(YoungDiagram { lambda })
    }

    /// `λ_j = x_{N-j+1} - N + j - 1`.
    pub fn from_config(x: &Config) -> Self {
        let n = x.len();
        let lambda = (1..=n).map(|j| x.sites()[n - j] + j - 1 - n).collect();
        YoungDiagram { lambda }
    }

    /// Inverse of [`YoungDiagram::from_config`] on `M` sites.
    pub fn to_config(&self, m: usize) -> Result<Config> {
        let n = self.lambda.len();
        if self.lambda.first().is_some_and(|&l| l + n > m) {
            return Err(Error::InvalidConfig(format!("{:?} does not fit in {} sites", self.lambda, m)));
        }
        let mut sites: Vec<usize> = (1..=n).map(|j| self.lambda[j - 1] + n + 1 - j).collect();
        sites.reverse();
        Config::new(m, sites)
    }

    pub fn parts(&self) -> &[usize] {
        &self.lambda
    }

    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }
}

/// `G_λ(z; β) = det(z_j^{λ_k+N-k} (1+βz_j)^{k-1}) / Π_{j<k} (z_j - z_k)`,
/// with the division checked to be exact.
pub fn grothendieck_det<F: Field>(lambda: &YoungDiagram, zs: &[F], beta: &F) -> Result<F> {
    let n = zs.len();
    if lambda.len() != n {
        return Err(Error::Size(format!("{} parts for {n} variables", lambda.len())));
    }
    check_distinct(zs)?;
    let m = Matrix::from_fn(n, n, |j, k| {
        let shifted = F::one() + &(beta.clone() * &zs[j]);
        zs[j].pow((lambda.parts()[k] + n - k - 1) as u32) * &shifted.pow(k as u32)
    });
    let det = m.determinant()?;
    let mut vandermonde = F::one();
    for j in 0..n {
        for k in j + 1..n {
            vandermonde *= &(zs[j].clone() - &zs[k]);
        }
    }
    Ok(det.exact_quotient(&vandermonde)?)
}

/// `(-β)^{-N(N-1)/2} Π_j u_j^M · G_λ(z; β)` with `z_j = -β⁻¹ - u_j⁻¹` and
/// `λ` the diagram of `x`: the five-vertex limit of the `G` family.
pub fn degeneration_rhs<F: Field>(x: &Config, us: &[F], beta: &F) -> Result<F> {
    let n = x.len();
    if us.len() != n {
        return Err(Error::Size(format!("{} spectral parameters for {n} particles", us.len())));
    }
    if beta.is_zero() {
        return Err(Error::Constraint("beta must be nonzero".into()));
    }
    if us.iter().any(|u| u.is_zero()) {
        return Err(Error::Constraint("spectral parameters must be nonzero".into()));
    }
    let beta_inv = beta.try_inv()?;
    let zs: Vec<F> = us.iter().map(|u| Ok(-beta_inv.clone() - &u.try_inv()?)).collect::<Result<_>>()?;
    let g = grothendieck_det(&YoungDiagram::from_config(x), &zs, beta)?;
    let minus_beta = -beta.clone();
    let mut out = minus_beta.pow((n * n.saturating_sub(1) / 2) as u32).try_inv()? * &g;
    for u in us {
        out *= &u.pow(x.m() as u32);
    }
    Ok(out)
}
