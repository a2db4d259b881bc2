use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::ring::{Field, Matrix};
use crate::{Error, Result};

use super::{l_weight, ParamSet};

/// Largest supported lattice length.
pub const MAX_SITES: usize = 62;

/// Strictly increasing site list in `{1..M}`.
///
/// The same type serves particle configurations `x` and hole
/// configurations `x̄`; which one is meant depends on the caller.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Config {
    m: usize,
    sites: Vec<usize>,
}

impl Config {
    pub fn new(m: usize, sites: Vec<usize>) -> Result<Self> {
        if m > MAX_SITES {
            return Err(Error::InvalidConfig(format!("lattice length {m} exceeds {MAX_SITES}")));
        }
        if let Some(&s) = sites.iter().find(|&&s| s == 0 || s > m) {
            return Err(Error::InvalidConfig(format!("site {s} outside 1..={m}")));
        }
        if sites.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidConfig(format!("sites {sites:?} are not strictly increasing")));
        }
        Ok(Config { m, sites })
    }

    pub fn empty(m: usize) -> Self {
        Config { m, sites: Vec::new() }
    }

    pub fn full(m: usize) -> Self {
        Config { m, sites: (1..=m).collect() }
    }

    /// The first `n` sites, `(1, ..., n)`.
    pub fn packed(m: usize, n: usize) -> Self {
        Config { m, sites: (1..=n).collect() }
    }

    pub fn from_bits(m: usize, bits: u64) -> Self {
        Config { m, sites: (1..=m).filter(|&j| bits >> (j - 1) & 1 == 1).collect() }
    }

    /// All `C(M, n)` configurations in lexicographic order.
    pub fn all(m: usize, n: usize) -> Vec<Config> {
        (1..=m).combinations(n).map(|sites| Config { m, sites }).collect()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn sites(&self) -> &[usize] {
        &self.sites
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    /// Bit `j-1` set for every listed site `j`.
    pub fn bits(&self) -> u64 {
        self.sites.iter().fold(0, |acc, &s| acc | 1 << (s - 1))
    }

    /// The complementary sites in `{1..M}`.
    pub fn complement(&self) -> Config {
        Config { m: self.m, sites: (1..=self.m).filter(|j| !self.sites.contains(j)).collect() }
    }

    /// Basis state of the particle configuration when `self` lists holes.
    pub fn hole_bits(&self) -> u64 {
        full_bits(self.m) & !self.bits()
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.sites.iter().join(","))
    }
}

pub(crate) fn full_bits(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// Sparse vector over the `2^M` occupation basis. Zero amplitudes are
/// never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<F> {
    m: usize,
    amps: BTreeMap<u64, F>,
}

impl<F: Field> StateVector<F> {
    pub fn zero(m: usize) -> Self {
        StateVector { m, amps: BTreeMap::new() }
    }

    pub fn basis(m: usize, bits: u64) -> Self {
        let mut s = Self::zero(m);
        s.amps.insert(bits, F::one());
        s
    }

    /// `|Ω⟩`, all sites empty.
    pub fn vacuum(m: usize) -> Self {
        Self::basis(m, 0)
    }

    /// `|1⋯M⟩`, all sites occupied.
    pub fn filled(m: usize) -> Self {
        Self::basis(m, full_bits(m))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, bits: u64) -> F {
        self.amps.get(&bits).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_to(&mut self, bits: u64, v: &F) {
        if v.is_zero() {
            return;
        }
        match self.amps.get_mut(&bits) {
            Some(x) => {
                *x += v;
                if x.is_zero() {
                    self.amps.remove(&bits);
                }
            }
            None => {
                self.amps.insert(bits, v.clone());
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&u64, &F)> {
        self.amps.iter()
    }

    /// Number of nonzero amplitudes.
    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.amps.is_empty()
    }

    /// `Σ_s self[s] * other[s]`, pairing a bra with a ket.
    pub fn dot(&self, other: &StateVector<F>) -> F {
        let mut acc = F::zero();
        for (bits, x) in &self.amps {
            if let Some(y) = other.amps.get(bits) {
                acc += &(x.clone() * y);
            }
        }
        acc
    }
}

/// Monodromy element selected by auxiliary boundary states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RowOp {
    A,
    B,
    C,
    D,
}

impl RowOp {
    /// `(incoming, outgoing)` auxiliary state: `A = ⟨0|T|0⟩`, `B = ⟨0|T|1⟩`,
    /// `C = ⟨1|T|0⟩`, `D = ⟨1|T|1⟩`.
    fn boundary(self) -> (u8, u8) {
        match self {
            RowOp::A => (0, 0),
            RowOp::B => (1, 0),
            RowOp::C => (0, 1),
            RowOp::D => (1, 1),
        }
    }
}

/// The six local weights at one site, indexed by `(alpha, beta, gamma, delta)`.
struct SiteWeights<F>([[F; 4]; 4]);

impl<F: Field> SiteWeights<F> {
    fn new(u: &F, w: &F, p: &ParamSet<F>) -> Self {
        let e = |a, b, c, d| l_weight(a, b, c, d, u, w, p);
        // index: 2*alpha+beta, 2*gamma+delta
        SiteWeights(std::array::from_fn(|i| std::array::from_fn(|o| e((i >> 1) as u8, (i & 1) as u8, (o >> 1) as u8, (o & 1) as u8))))
    }

    fn get(&self, alpha: u8, beta: u8, gamma: u8, delta: u8) -> &F {
        &self.0[(2 * alpha + beta) as usize][(2 * gamma + delta) as usize]
    }
}

/// Sweeps sites `1..M` (the order of `L_{aM} ⋯ L_{a1}` acting on a ket)
/// carrying the auxiliary bit. `bra = false` fixes the incoming quantum bits
/// to `start` and enumerates outgoing ones; `bra = true` does the reverse.
fn sweep<F: Field>(op: RowOp, weights: &[SiteWeights<F>], start: u64, bra: bool, out: &mut StateVector<F>, scale: &F) {
    let (aux_in, aux_out) = op.boundary();
    let m = weights.len();
    // (site index, aux bit, produced bits, weight)
    let mut stack: Vec<(usize, u8, u64, F)> = vec![(0, aux_in, 0, scale.clone())];
    while let Some((j, alpha, acc, wt)) = stack.pop() {
        if j == m {
            if alpha == aux_out {
                out.add_to(acc, &wt);
            }
            continue;
        }
        let known = (start >> j & 1) as u8;
        for free in 0..2u8 {
            let (beta, delta) = if bra { (free, known) } else { (known, free) };
            let Some(gamma) = (alpha + beta).checked_sub(delta).filter(|&g| g <= 1) else {
                continue;
            };
            let x = weights[j].get(alpha, beta, gamma, delta);
            if x.is_zero() {
                continue;
            }
            stack.push((j + 1, gamma, acc | (free as u64) << j, wt.clone() * x));
        }
    }
}

fn site_weights<F: Field>(m: usize, u: &F, p: &ParamSet<F>) -> Vec<SiteWeights<F>> {
    (1..=m).map(|j| SiteWeights::new(u, &p.w_at(j), p)).collect()
}

/// `op(u) |s⟩`, never materializing the `2^M x 2^M` operator.
pub fn apply_row_operator<F: Field>(op: RowOp, u: &F, s: &StateVector<F>, p: &ParamSet<F>) -> StateVector<F> {
    let weights = site_weights(s.m, u, p);
    let mut out = StateVector::zero(s.m);
    for (&bits, amp) in &s.amps {
        sweep(op, &weights, bits, false, &mut out, amp);
    }
    out
}

/// `⟨s| op(u)`, returned as the coefficients of the resulting bra.
pub fn apply_row_operator_bra<F: Field>(op: RowOp, u: &F, s: &StateVector<F>, p: &ParamSet<F>) -> StateVector<F> {
    let weights = site_weights(s.m, u, p);
    let mut out = StateVector::zero(s.m);
    for (&bits, amp) in &s.amps {
        sweep(op, &weights, bits, true, &mut out, amp);
    }
    out
}

/// Dense `2^M x 2^M` matrix of `op(u)`; rows are outgoing states. Meant for
/// small `M` only.
pub fn operator_matrix<F: Field>(op: RowOp, u: &F, m: usize, p: &ParamSet<F>) -> Matrix<F> {
    let dim = 1usize << m;
    let mut mat = Matrix::zeros(dim, dim);
    for col in 0..dim {
        let image = apply_row_operator(op, u, &StateVector::basis(m, col as u64), p);
        for (&row, x) in image.iter() {
            mat[(row as usize, col)] = x.clone();
        }
    }
    mat
}

/// `⟨bra| op(u) |ket⟩` for basis states given as particle configurations.
pub fn matrix_element<F: Field>(op: RowOp, bra: &Config, u: &F, ket: &Config, p: &ParamSet<F>) -> Result<F> {
    if bra.m() != ket.m() {
        return Err(Error::Size(format!("bra on {} sites, ket on {}", bra.m(), ket.m())));
    }
    let image = apply_row_operator(op, u, &StateVector::basis(ket.m(), ket.bits()), p);
    Ok(image.get(bra.bits()))
}
