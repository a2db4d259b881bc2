use crate::ring::{Field, Matrix};
use crate::Result;

use super::ParamSet;

/// Entry `<gamma|<delta| L(u, w) |alpha>|beta>` of the inhomogeneous
/// L-operator; `alpha, gamma` are auxiliary bits, `beta, delta` quantum bits.
/// Zero off the ice rule.
pub fn l_weight<F: Field>(alpha: u8, beta: u8, gamma: u8, delta: u8, u: &F, w: &F, p: &ParamSet<F>) -> F {
    let one_minus_t = F::one() - &p.t;
    match (alpha, beta, gamma, delta) {
        (0, 0, 0, 0) => p.a.clone() * u + &(p.b.clone() * w),
        (0, 1, 0, 1) => p.a.clone() * &p.t * u + &(p.b.clone() * w),
        (1, 0, 0, 1) => one_minus_t * &p.c * u,
        (0, 1, 1, 0) => one_minus_t * &p.d * w,
        (1, 0, 1, 0) => p.e.clone() * u + &(p.f.clone() * w),
        (1, 1, 1, 1) => p.e.clone() * u + &(p.t.clone() * &p.f * w),
        _ => F::zero(),
    }
}

/// Entry `<gamma|<delta| R(u) |alpha>|beta>` of the six-vertex R-matrix.
pub fn r_weight<F: Field>(alpha: u8, beta: u8, gamma: u8, delta: u8, u: &F, t: &F) -> F {
    let one = F::one();
    match (alpha, beta, gamma, delta) {
        (0, 0, 0, 0) | (1, 1, 1, 1) => u.clone() - t,
        (0, 1, 0, 1) => t.clone() * &(u.clone() - &one),
        (1, 0, 0, 1) => (one - t) * u,
        (0, 1, 1, 0) => one - t,
        (1, 0, 1, 0) => u.clone() - &one,
        _ => F::zero(),
    }
}

/// Embeds a two-space operator acting on tensor legs `x, y` of a
/// three-fold product into an 8x8 matrix. Leg 0 is the most significant bit.
fn embed<F: Field>(x: usize, y: usize, wt: impl Fn(u8, u8, u8, u8) -> F) -> Matrix<F> {
    let z = 3 - x - y;
    let bit = |s: usize, k: usize| ((s >> (2 - k)) & 1) as u8;
    Matrix::from_fn(8, 8, |o, i| {
        if bit(o, z) != bit(i, z) {
            F::zero()
        } else {
            wt(bit(i, x), bit(i, y), bit(o, x), bit(o, y))
        }
    })
}

fn product<F: Field>(ms: [&Matrix<F>; 3]) -> Matrix<F> {
    ms[0].mul(ms[1]).and_then(|m| m.mul(ms[2])).expect("8x8 factors")
}

/// `R12(u1/u2) L13(u1) L23(u2) - L23(u2) L13(u1) R12(u1/u2)` on the
/// 8-dimensional triple product (legs: a, b, quantum).
pub fn rll_defect<F: Field>(u1: &F, u2: &F, p: &ParamSet<F>) -> Result<Matrix<F>> {
    let ratio = u1.try_div(u2)?;
    let one = F::one();
    let r12 = embed(0, 1, |a, b, c, d| r_weight(a, b, c, d, &ratio, &p.t));
    let l13 = embed(0, 2, |a, b, c, d| l_weight(a, b, c, d, u1, &one, p));
    let l23 = embed(1, 2, |a, b, c, d| l_weight(a, b, c, d, u2, &one, p));
    Ok(product([&r12, &l13, &l23]).sub(&product([&l23, &l13, &r12]))?)
}

/// True iff the RLL relation holds exactly at `(u1, u2)`.
pub fn check_rll<F: Field>(u1: &F, u2: &F, p: &ParamSet<F>) -> Result<bool> {
    Ok(rll_defect(u1, u2, p)?.is_zero())
}

/// Yang-Baxter check for an arbitrary R-matrix given by its entries
/// `r(alpha, beta, gamma, delta, u)`.
pub fn check_ybe_with<F: Field>(u1: &F, u2: &F, r: impl Fn(u8, u8, u8, u8, &F) -> F) -> Result<bool> {
    let ratio = u1.try_div(u2)?;
    let r12 = embed(0, 1, |a, b, c, d| r(a, b, c, d, &ratio));
    let r13 = embed(0, 2, |a, b, c, d| r(a, b, c, d, u1));
    let r23 = embed(1, 2, |a, b, c, d| r(a, b, c, d, u2));
    Ok(product([&r12, &r13, &r23]) == product([&r23, &r13, &r12]))
}

/// True iff `R12(u1/u2) R13(u1) R23(u2) = R23(u2) R13(u1) R12(u1/u2)`.
pub fn check_ybe<F: Field>(u1: &F, u2: &F, p: &ParamSet<F>) -> Result<bool> {
    check_ybe_with(u1, u2, |a, b, c, d, u| r_weight(a, b, c, d, u, &p.t))
}
