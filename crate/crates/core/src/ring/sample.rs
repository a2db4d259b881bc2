use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{MultiPoly, RingError, Var};

/// Upper bound for sampled numerators and denominators.
pub const SAMPLE_BOUND: i64 = 1_000_000;

/// Maximum number of resampling rounds in [`random_point`].
pub const MAX_RESAMPLE_ROUNDS: usize = 100;

/// Deterministic pseudo-random generator for a seed.
pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    let n = rng.gen_range(1..=SAMPLE_BOUND);
    let d = rng.gen_range(1..=SAMPLE_BOUND);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Draws a rational point for `vars` at which none of the `avoid`
/// polynomials vanishes. Each coordinate is `n/d` with `n, d` uniform in
/// `[1, 10^6]`.
pub fn random_point(seed: u64, vars: &[Var], avoid: &[MultiPoly]) -> Result<BTreeMap<Var, BigRational>, RingError> {
    let mut rng = rng_for(seed);
    random_point_with(&mut rng, vars, avoid)
}

pub fn random_point_with<R: Rng>(
    rng: &mut R,
    vars: &[Var],
    avoid: &[MultiPoly],
) -> Result<BTreeMap<Var, BigRational>, RingError> {
    for _ in 0..MAX_RESAMPLE_ROUNDS {
        let point: BTreeMap<Var, BigRational> = vars.iter().map(|&v| (v, random_rational(rng))).collect();
        let mut ok = true;
        for p in avoid {
            if p.eval(&point)?.is_zero() {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(point);
        }
    }
    Err(RingError::SamplingExhausted)
}
