use crate::lattice::{matrix_element, Config, ParamSet, RowOp};
use crate::ring::Field;
use crate::{Error, Result};

use super::family::{Family, Forms};

/// `y ≻ x`: `y_1 ≤ x_1 ≤ y_2 ≤ … ≤ x_N ≤ y_{N+1}`.
pub fn interlaces(y: &[usize], x: &[usize]) -> bool {
    y.len() == x.len() + 1 && x.iter().enumerate().all(|(j, &xj)| y[j] <= xj && xj <= y[j + 1])
}

/// Entries of `y` not equal to their neighbours `x_j`, `x_{j-1}`; a missing
/// neighbour never compares equal.
fn unmatched_y(y: &[usize], x: &[usize]) -> Vec<usize> {
    y.iter()
        .enumerate()
        .filter(|&(j, &yj)| x.get(j) != Some(&yj) && (j == 0 || x.get(j - 1) != Some(&yj)))
        .map(|(_, &yj)| yj)
        .collect()
}

/// Entries of `x` not equal to `y_j` or `y_{j+1}`.
fn unmatched_x(y: &[usize], x: &[usize]) -> Vec<usize> {
    x.iter().enumerate().filter(|&(j, &xj)| y.get(j) != Some(&xj) && y.get(j + 1) != Some(&xj)).map(|(_, &xj)| xj).collect()
}

/// Which weight an interval site takes depending on whether it lies in `x`.
struct Interval<'a, F> {
    with_x: &'a F,
    without_x: &'a F,
}

impl<F: Field> Interval<'_, F> {
    fn product(&self, lo: usize, hi: usize, x: &[usize]) -> F {
        if hi <= lo + 1 {
            return F::one();
        }
        let inside = x.iter().filter(|&&s| lo < s && s < hi).count() as u32;
        let total = (hi - lo - 1) as u32;
        self.with_x.pow(inside) * &self.without_x.pow(total - inside)
    }
}

/// One-variable skew factor `G_{y,x}(u)` (and its three siblings).
///
/// Writes `p_1 < … < p_{k+1}` for the unmatched entries of `y` and
/// `q_1 < … < q_k` for those of `x`, with `q_0 = 0`, `q_{k+1} = M+1`. The
/// `p`'s and `q`'s carry the two off-diagonal weights; sites in
/// `(p_j, q_j)` and `(q_{j-1}, p_j)` carry diagonal weights chosen by
/// whether they belong to `x`. For `H` and `Hbar` the configurations list
/// holes. Zero unless `y ≻ x`.
pub fn skew_factor<F: Field>(kind: Family, y: &Config, x: &Config, u: &F, p: &ParamSet<F>) -> Result<F> {
    if y.m() != x.m() {
        return Err(Error::Size(format!("y on {} sites, x on {}", y.m(), x.m())));
    }
    let (ys, xs) = (y.sites(), x.sites());
    if !interlaces(ys, xs) {
        return Ok(F::zero());
    }
    let m = y.m();
    let l = Forms::new(u, p);
    // (weight at each p, weight at each q, (p,q) interval, (q,p) interval)
    let (at_p, at_q, forward, backward) = match kind {
        Family::G => (&l.cu, &l.d, (&l.atu_b, &l.au_b), (&l.eu_tf, &l.eu_f)),
        Family::H => (&l.cu, &l.d, (&l.au_b, &l.atu_b), (&l.eu_f, &l.eu_tf)),
        Family::Gbar => (&l.d, &l.cu, (&l.eu_tf, &l.eu_f), (&l.atu_b, &l.au_b)),
        Family::Hbar => (&l.d, &l.cu, (&l.eu_f, &l.eu_tf), (&l.au_b, &l.atu_b)),
    };
    let forward = Interval { with_x: forward.0, without_x: forward.1 };
    let backward = Interval { with_x: backward.0, without_x: backward.1 };

    let ps = unmatched_y(ys, xs);
    let mut qs = vec![0];
    qs.extend(unmatched_x(ys, xs));
    qs.push(m + 1);
    if ps.is_empty() || qs.len() != ps.len() + 1 {
        return Err(Error::InvalidConfig(format!("unbalanced skew pair {y} / {x}")));
    }
    let k = ps.len() - 1;
    let mut out = at_p.pow(k as u32 + 1) * &at_q.pow(k as u32);
    for (j, &pj) in ps.iter().enumerate() {
        out *= &forward.product(pj, qs[j + 1], xs);
        out *= &backward.product(qs[j], pj, xs);
    }
    Ok(out)
}

/// The same quantity read off a single row operator:
/// `⟨y|B|x⟩`, `⟨x̄|B|ȳ⟩`, `⟨x|C|y⟩`, `⟨ȳ|C|x̄⟩` for `G, H, Gbar, Hbar`.
pub fn skew_from_lattice<F: Field>(kind: Family, y: &Config, x: &Config, u: &F, p: &ParamSet<F>) -> Result<F> {
    match kind {
        Family::G => matrix_element(RowOp::B, y, u, x, p),
        Family::H => matrix_element(RowOp::B, &x.complement(), u, &y.complement(), p),
        Family::Gbar => matrix_element(RowOp::C, x, u, y, p),
        Family::Hbar => matrix_element(RowOp::C, &y.complement(), u, &x.complement(), p),
    }
}
