//! Matrix-product form of the wavefunction.
//!
//! Reading the lattice column by column, each quantum site `j` carries the
//! monodromy `𝒯_j = L_{Nj}(u_N) ⋯ L_{1j}(u_1)` on `W^{⊗N}`. Its
//! quantum-diagonal element `𝒜_N` (site stays empty) and creation element
//! `𝒞_N` (site becomes occupied) are `2^N x 2^N` matrices. In every
//! Kronecker product below the newest auxiliary space is the most
//! significant factor, so auxiliary space 1 is the lowest bit.
//!
//! All matrices here use the homogeneous L-operator (`w = 1`).

use crate::ring::{Field, Matrix};
use crate::{Error, Result};

use super::{Config, ParamSet};

fn two_by_two<F: Field>(x00: F, x01: F, x10: F, x11: F) -> Matrix<F> {
    Matrix::from_rows(vec![vec![x00, x01], vec![x10, x11]]).expect("2x2")
}

fn block_diag<F: Field>(x: &Matrix<F>, y: &Matrix<F>) -> Matrix<F> {
    let z = Matrix::zeros(x.rows(), x.cols());
    Matrix::from_blocks(x, &z, &z, y).expect("equal blocks")
}

struct Local<F> {
    au_b: F,
    eu_f: F,
    atu_b: F,
    eu_tf: F,
    cu: F,
    d: F,
}

impl<F: Field> Local<F> {
    fn new(u: &F, p: &ParamSet<F>) -> Self {
        let omt = F::one() - &p.t;
        Local {
            au_b: p.a.clone() * u + &p.b,
            eu_f: p.e.clone() * u + &p.f,
            atu_b: p.a.clone() * &p.t * u + &p.b,
            eu_tf: p.e.clone() * u + &(p.t.clone() * &p.f),
            cu: omt.clone() * &p.c * u,
            d: omt * &p.d,
        }
    }
}

/// One step of the column recursion: from `(𝒜_n, 𝒞_n)` to
/// `(𝒜_{n+1}, 𝒞_{n+1})` with the new spectral parameter `u_next`.
pub fn mp_recursion_step<F: Field>(
    an: &Matrix<F>,
    cn: &Matrix<F>,
    u_next: &F,
    p: &ParamSet<F>,
) -> Result<(Matrix<F>, Matrix<F>)> {
    if !an.is_square() || an.rows() != cn.rows() || an.cols() != cn.cols() {
        return Err(Error::Size(format!("A is {}x{}, C is {}x{}", an.rows(), an.cols(), cn.rows(), cn.cols())));
    }
    let l = Local::new(u_next, p);
    let (z, o) = (F::zero, F::zero);
    let a_next = two_by_two(l.au_b.clone(), z(), o(), l.eu_f.clone())
        .kron(an)
        .add(&two_by_two(z(), o(), l.d.clone(), z()).kron(cn))?;
    let c_next = two_by_two(z(), l.cu.clone(), o(), z())
        .kron(an)
        .add(&two_by_two(l.atu_b.clone(), z(), o(), l.eu_tf.clone()).kron(cn))?;
    Ok((a_next, c_next))
}

/// `(𝒜_N, 𝒞_N)` for spectral parameters `u_1..u_N`, built from the trivial
/// 1x1 pair `(1, 0)`.
pub fn mp_operators<F: Field>(us: &[F], p: &ParamSet<F>) -> Result<(Matrix<F>, Matrix<F>)> {
    let mut a = Matrix::identity(1);
    let mut c = Matrix::zeros(1, 1);
    for u in us {
        (a, c) = mp_recursion_step(&a, &c, u, p)?;
    }
    Ok((a, c))
}

/// `⟨0^N| X |1^N⟩` with `X = 𝒜^{M-x_N} 𝒞 𝒜^{x_N-x_{N-1}-1} ⋯ 𝒞 𝒜^{x_1-1}`,
/// the trace against `Q = |1^N⟩⟨0^N|`.
pub fn mp_trace_wavefunction<F: Field>(x: &Config, us: &[F], p: &ParamSet<F>) -> Result<F> {
    if us.len() != x.len() {
        return Err(Error::Size(format!("{} spectral parameters for {} particles", us.len(), x.len())));
    }
    let (a, c) = mp_operators(us, p)?;
    let dim = a.rows();
    let mut v = vec![F::zero(); dim];
    v[dim - 1] = F::one();
    let mut prev = 0;
    for &s in x.sites() {
        for _ in 0..s - prev - 1 {
            v = a.mul_vec(&v);
        }
        v = c.mul_vec(&v);
        prev = s;
    }
    for _ in 0..x.m() - prev {
        v = a.mul_vec(&v);
    }
    Ok(v[0].clone())
}

/// Diagonal form of the column monodromy: `𝒜_n = G 𝒜' G⁻¹` with `𝒜'`
/// diagonal, and `𝒞_n = G (Σ_j 𝒞'^{(j)}) G⁻¹`.
#[derive(Clone, Debug)]
pub struct MpDiagonal<F> {
    /// Diagonal `𝒜'`.
    pub a: Matrix<F>,
    /// `𝒞'^{(1)}, …, 𝒞'^{(n)}` in the diagonal basis.
    pub pieces: Vec<Matrix<F>>,
    pub g: Matrix<F>,
    pub g_inv: Matrix<F>,
}

impl<F: Field> MpDiagonal<F> {
    pub fn n(&self) -> usize {
        self.pieces.len()
    }

    fn conj(&self, x: &Matrix<F>) -> Matrix<F> {
        self.g.mul(x).and_then(|y| y.mul(&self.g_inv)).expect("square")
    }

    /// `𝒜_n` recovered in the original basis.
    pub fn a_original(&self) -> Matrix<F> {
        self.conj(&self.a)
    }

    /// `𝒞_n^{(j)}` in the original basis.
    pub fn pieces_original(&self) -> Vec<Matrix<F>> {
        self.pieces.iter().map(|c| self.conj(c)).collect()
    }

    /// `Σ_j 𝒞_n^{(j)}` in the original basis.
    pub fn c_original(&self) -> Matrix<F> {
        let mut sum = Matrix::zeros(self.a.rows(), self.a.cols());
        for c in &self.pieces {
            sum = sum.add(c).expect("same size");
        }
        self.conj(&sum)
    }
}

/// Builds the diagonal form recursively: `G_{n+1} = [[G, 0], [G H, G]]` with
/// `H = 𝒜'⁻¹ Σ_j (au_j+b)/(c(u_j-u_{n+1})) 𝒞'^{(j)}`.
pub fn mp_diagonalized<F: Field>(us: &[F], p: &ParamSet<F>) -> Result<MpDiagonal<F>> {
    let Some(u1) = us.first() else {
        return Err(Error::Size("at least one spectral parameter is required".into()));
    };
    let l = Local::new(u1, p);
    let mut diag = MpDiagonal {
        a: Matrix::diagonal(vec![l.au_b, l.eu_f]),
        pieces: vec![two_by_two(F::zero(), l.cu, F::zero(), F::zero())],
        g: Matrix::identity(2),
        g_inv: Matrix::identity(2),
    };
    for (n, u_next) in us.iter().enumerate().skip(1) {
        for (j, uj) in us[..n].iter().enumerate() {
            if uj == u_next {
                return Err(Error::Coincident(format!("u{} = u{}", j + 1, n + 1)));
            }
        }
        let l = Local::new(u_next, p);
        let dim = diag.a.rows();
        let a_inv = Matrix::diagonal((0..dim).map(|i| diag.a[(i, i)].try_inv()).collect::<std::result::Result<Vec<_>, _>>()?);
        let mut h_sum = Matrix::zeros(dim, dim);
        for (j, cj) in diag.pieces.iter().enumerate() {
            let uj = &us[j];
            let kappa = (p.a.clone() * uj + &p.b).try_div(&(p.c.clone() * &(uj.clone() - u_next)))?;
            h_sum = h_sum.add(&cj.scale(&kappa))?;
        }
        let h = a_inv.mul(&h_sum)?;
        let zero = Matrix::zeros(dim, dim);
        let gh = diag.g.mul(&h)?;
        let g = Matrix::from_blocks(&diag.g, &zero, &gh, &diag.g)?;
        let h_ginv = h.mul(&diag.g_inv)?.scale(&-F::one());
        let g_inv = Matrix::from_blocks(&diag.g_inv, &zero, &h_ginv, &diag.g_inv)?;

        let mut pieces = Vec::with_capacity(n + 1);
        for (j, cj) in diag.pieces.iter().enumerate() {
            let uj = &us[j];
            let denom = uj.clone() - u_next;
            let top = (uj.clone() - &(p.t.clone() * u_next)) * &l.au_b;
            let bottom = (p.t.clone() * uj - u_next) * &l.eu_f;
            pieces.push(block_diag(&cj.scale(&top.try_div(&denom)?), &cj.scale(&bottom.try_div(&denom)?)));
        }
        pieces.push(Matrix::from_blocks(&zero, &diag.a.scale(&l.cu), &zero, &zero)?);
        let a = block_diag(&diag.a.scale(&l.au_b), &diag.a.scale(&l.eu_f));
        diag = MpDiagonal { a, pieces, g, g_inv };
    }
    Ok(diag)
}

/// The configuration-independent prefactor
/// `K = Π_j ((au_j+b)/(eu_j+f))^j · Tr[Q 𝒜^{M-N} 𝒞^{(N)} ⋯ 𝒞^{(1)}]`.
pub fn mp_prefactor<F: Field>(m: usize, us: &[F], p: &ParamSet<F>) -> Result<F> {
    let n = us.len();
    if n > m {
        return Err(Error::Size(format!("{n} particles on {m} sites")));
    }
    if n == 0 {
        return Ok(F::one());
    }
    let diag = mp_diagonalized(us, p)?;
    let dim = diag.a.rows();
    // Q sits in the original basis; move |1^N⟩ into the diagonal one.
    let mut v: Vec<F> = (0..dim).map(|i| diag.g_inv[(i, dim - 1)].clone()).collect();
    for c in &diag.pieces {
        v = c.mul_vec(&v);
    }
    for _ in 0..m - n {
        v = diag.a.mul_vec(&v);
    }
    let mut tr = F::zero();
    for (g, x) in diag.g.row(0).iter().zip(&v) {
        tr += &(g.clone() * x);
    }
    let mut k = tr;
    for (j, u) in us.iter().enumerate() {
        let ratio = (p.a.clone() * u + &p.b).try_div(&(p.e.clone() * u + &p.f))?;
        k *= &ratio.pow(j as u32 + 1);
    }
    Ok(k)
}

/// Closed form `K = Π_j (1-t)cu_j(au_j+b)^M/(eu_j+f) · Π_{j<k} (tu_j-u_k)/(u_j-u_k)`.
pub fn prefactor_closed_form<F: Field>(m: usize, us: &[F], p: &ParamSet<F>) -> Result<F> {
    let mut k = F::one();
    for u in us {
        let l = Local::new(u, p);
        k *= &(l.cu * &l.au_b.pow(m as u32)).try_div(&l.eu_f)?;
    }
    for (j, uj) in us.iter().enumerate() {
        for uk in &us[j + 1..] {
            k *= &(p.t.clone() * uj - uk).try_div(&(uj.clone() - uk))?;
        }
    }
    Ok(k)
}
