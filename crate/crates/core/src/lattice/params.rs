use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::Rng;

use crate::ring::{random_point_with, random_rational, rng_for, Field, MultiPoly, RatFunc, Var};
use crate::{Error, Result};

/// Model parameters `t, a, b, c, d, e, f` and optional inhomogeneities.
///
/// The L-operator solves the RLL relation only on the surface
/// `cd + af = 0`, `tcd + be = 0`. [`ParamSet::from_free`] derives `e` and
/// `f` from the five free values so that the surface is hit exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamSet<F> {
    pub t: F,
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
    pub e: F,
    pub f: F,
    /// `w_1..w_M`; absent means homogeneous (all ones).
    pub w: Option<Vec<F>>,
}

impl<F: Field> ParamSet<F> {
    /// Builds the parameter set with `e = -tcd/b` and `f = -cd/a`.
    pub fn from_free(t: F, a: F, b: F, c: F, d: F) -> Result<Self> {
        for (name, v) in [("a", &a), ("b", &b), ("c", &c), ("d", &d), ("t", &t)] {
            if v.is_zero() {
                return Err(Error::Constraint(format!("{name} must be nonzero")));
            }
        }
        if t == F::one() {
            return Err(Error::Constraint("t must differ from 1".into()));
        }
        let cd = c.clone() * &d;
        let f = -(cd.clone().try_div(&a)?);
        let e = -((t.clone() * &cd).try_div(&b)?);
        Ok(ParamSet { t, a, b, c, d, e, f, w: None })
    }

    /// No validation; used to build deliberately broken parameter sets.
    pub fn from_raw(t: F, a: F, b: F, c: F, d: F, e: F, f: F) -> Self {
        ParamSet { t, a, b, c, d, e, f, w: None }
    }

    /// `(cd + af, tcd + be)`; both vanish on the constraint surface.
    pub fn residuals(&self) -> (F, F) {
        let cd = self.c.clone() * &self.d;
        let r1 = cd.clone() + &(self.a.clone() * &self.f);
        let r2 = self.t.clone() * &cd + &(self.b.clone() * &self.e);
        (r1, r2)
    }

    pub fn satisfies_constraints(&self) -> bool {
        let (r1, r2) = self.residuals();
        r1.is_zero() && r2.is_zero()
    }

    /// Checks the constraints, nonvanishing of `a..f`, and `t != 1`.
    pub fn validate(&self) -> Result<()> {
        let (r1, r2) = self.residuals();
        if !r1.is_zero() {
            return Err(Error::Constraint(format!("cd+af = {r1}, expected 0")));
        }
        if !r2.is_zero() {
            return Err(Error::Constraint(format!("tcd+be = {r2}, expected 0")));
        }
        for (name, v) in [("a", &self.a), ("b", &self.b), ("c", &self.c), ("d", &self.d), ("e", &self.e), ("f", &self.f)] {
            if v.is_zero() {
                return Err(Error::Constraint(format!("{name} must be nonzero")));
            }
        }
        if self.t == F::one() {
            return Err(Error::Constraint("t must differ from 1".into()));
        }
        Ok(())
    }

    pub fn with_w(mut self, w: Vec<F>) -> Self {
        self.w = Some(w);
        self
    }

    pub fn homogeneous(&self) -> Self {
        ParamSet { w: None, ..self.clone() }
    }

    /// Inhomogeneity at site `j` (1-based); one when absent.
    pub fn w_at(&self, j: usize) -> F {
        match &self.w {
            Some(w) if j >= 1 && j <= w.len() => w[j - 1].clone(),
            _ => F::one(),
        }
    }

    /// Same set with `f` replaced by `f + 1`, breaking `cd + af = 0`.
    pub fn with_f_perturbed(&self) -> Self {
        ParamSet { f: self.f.clone() + &F::one(), ..self.clone() }
    }

    /// Same set with `c` replaced by `c + 1` and nothing rederived.
    pub fn with_c_perturbed(&self) -> Self {
        ParamSet { c: self.c.clone() + &F::one(), ..self.clone() }
    }

    pub fn map<G: Field>(&self, g: impl Fn(&F) -> G) -> ParamSet<G> {
        ParamSet {
            t: g(&self.t),
            a: g(&self.a),
            b: g(&self.b),
            c: g(&self.c),
            d: g(&self.d),
            e: g(&self.e),
            f: g(&self.f),
            w: self.w.as_ref().map(|w| w.iter().map(&g).collect()),
        }
    }

    pub fn try_map<G: Field>(&self, g: impl Fn(&F) -> Result<G>) -> Result<ParamSet<G>> {
        let w = match &self.w {
            Some(w) => Some(w.iter().map(&g).collect::<Result<Vec<_>>>()?),
            None => None,
        };
        Ok(ParamSet {
            t: g(&self.t)?,
            a: g(&self.a)?,
            b: g(&self.b)?,
            c: g(&self.c)?,
            d: g(&self.d)?,
            e: g(&self.e)?,
            f: g(&self.f)?,
            w,
        })
    }
}

impl ParamSet<RatFunc> {
    /// Symbolic `t, a, b, c, d` with derived `e, f`.
    pub fn symbolic() -> Self {
        let v = RatFunc::var;
        Self::from_free(v(Var::T), v(Var::A), v(Var::B), v(Var::C), v(Var::D)).expect("symbols are nonzero")
    }

    /// Seven independent symbols; the constraints do not hold.
    pub fn unconstrained() -> Self {
        let v = RatFunc::var;
        Self::from_raw(v(Var::T), v(Var::A), v(Var::B), v(Var::C), v(Var::D), v(Var::E), v(Var::F))
    }

    /// `a = 1, b = t*beta, c = d = 1, e = -1/beta, f = -1` with symbolic `t`
    /// and `beta`. At `t = 0` the model becomes the five-vertex model.
    pub fn grothendieck() -> Self {
        let t = RatFunc::var(Var::T);
        let beta = RatFunc::var(Var::BETA);
        let e = -(RatFunc::one().try_div(&beta).expect("beta is nonzero"));
        Self::from_raw(t.clone(), RatFunc::one(), t * &beta, RatFunc::one(), RatFunc::one(), e, RatFunc::from_int(-1))
    }

    /// Evaluates every parameter at a rational point.
    pub fn eval_at(&self, point: &BTreeMap<Var, BigRational>) -> Result<ParamSet<BigRational>> {
        self.try_map(|x| Ok(x.eval(point)?))
    }

    /// Simultaneous substitution into every parameter.
    pub fn substitute(&self, bindings: &BTreeMap<Var, RatFunc>) -> Result<ParamSet<RatFunc>> {
        self.try_map(|x| Ok(x.substitute(bindings)?))
    }
}

impl ParamSet<BigRational> {
    /// Draws `t, a, b, c, d` as positive rationals with `t != 1`.
    pub fn sample(seed: u64) -> Self {
        Self::sample_with(&mut rng_for(seed))
    }

    pub fn sample_with<R: Rng>(rng: &mut R) -> Self {
        let one = BigRational::from_integer(1.into());
        let t = loop {
            let t = random_rational(rng);
            if t != one {
                break t;
            }
        };
        let (a, b, c, d) = (random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng));
        Self::from_free(t, a, b, c, d).expect("sampled values are valid")
    }

    pub fn lift(&self) -> ParamSet<RatFunc> {
        self.map(|q| RatFunc::constant(q.clone()))
    }

    /// The free values `t, a, b, c, d` in that order.
    pub fn free_values(&self) -> [&BigRational; 5] {
        [&self.t, &self.a, &self.b, &self.c, &self.d]
    }
}

/// Polynomials in `t, a, b, c, d, u_1..u_n` that must not vanish at an
/// evaluation point: `t`, `t-1`, `a..d`, `u_j`, `au_j+b`, `atu_j+b`, and the
/// differences `u_j-u_k`, `tu_j-u_k`, `u_j-tu_k`.
pub fn standard_avoid(n: usize) -> Vec<MultiPoly> {
    let v = MultiPoly::var;
    let t = v(Var::T);
    let (a, b) = (v(Var::A), v(Var::B));
    let mut out = vec![t.clone(), &t - &MultiPoly::one(), a.clone(), b.clone(), v(Var::C), v(Var::D)];
    for j in 1..=n {
        let uj = v(Var::u(j));
        out.push(uj.clone());
        out.push(&(&a * &uj) + &b);
        out.push(&(&(&a * &t) * &uj) + &b);
        for k in 1..=n {
            if k == j {
                continue;
            }
            let uk = v(Var::u(k));
            out.push(&uj - &uk);
            out.push(&(&t * &uj) - &uk);
        }
    }
    out
}

/// A seeded evaluation point: numeric parameters plus spectral values
/// `u_1..u_n` avoiding [`standard_avoid`]. With `fixed` parameters only the
/// spectral values are drawn.
pub fn sample_point<R: Rng>(
    rng: &mut R,
    n: usize,
    fixed: Option<&ParamSet<BigRational>>,
) -> Result<(ParamSet<BigRational>, Vec<BigRational>)> {
    let mut vars = Vec::new();
    let mut avoid = standard_avoid(n);
    match fixed {
        Some(p) => {
            let known: BTreeMap<Var, BigRational> =
                [Var::T, Var::A, Var::B, Var::C, Var::D].into_iter().zip(p.free_values().into_iter().cloned()).collect();
            avoid = avoid.iter().map(|q| q.partial_eval(&known)).filter(|q| q.as_constant().is_none()).collect();
        }
        None => vars.extend([Var::T, Var::A, Var::B, Var::C, Var::D]),
    }
    vars.extend((1..=n).map(Var::u));
    let point = random_point_with(rng, &vars, &avoid)?;
    let p = match fixed {
        Some(p) => p.clone(),
        None => ParamSet::from_free(
            point[&Var::T].clone(),
            point[&Var::A].clone(),
            point[&Var::B].clone(),
            point[&Var::C].clone(),
            point[&Var::D].clone(),
        )?,
    };
    let us = (1..=n).map(|j| point[&Var::u(j)].clone()).collect();
    Ok((p, us))
}

/// Symbolic spectral parameters `u_1..u_n`.
pub fn symbolic_us(n: usize) -> Vec<RatFunc> {
    (1..=n).map(|j| RatFunc::var(Var::u(j))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ratio;

    #[test]
    fn derived_parameters_satisfy_constraints() {
        assert!(ParamSet::symbolic().satisfies_constraints());
        assert!(ParamSet::grothendieck().satisfies_constraints());
        assert!(!ParamSet::unconstrained().satisfies_constraints());
        for seed in 0..20 {
            let p = ParamSet::sample(seed);
            p.validate().unwrap();
            assert!(p.with_f_perturbed().validate().is_err());
        }
    }

    #[test]
    fn invalid_free_values_rejected() {
        let q = |n| ratio(n, 1);
        assert!(ParamSet::from_free(q(1), q(1), q(2), q(3), q(4)).is_err());
        assert!(ParamSet::from_free(q(2), q(0), q(2), q(3), q(4)).is_err());
        assert!(ParamSet::from_free(q(0), q(1), q(2), q(3), q(4)).is_err());
    }

    #[test]
    fn sampled_point_avoids_denominators() {
        let mut rng = rng_for(5);
        let (p, us) = sample_point(&mut rng, 3, None).unwrap();
        let fixed = ParamSet::sample(9);
        let (p2, _) = sample_point(&mut rng, 3, Some(&fixed)).unwrap();
        assert_eq!(p2, fixed);
        for j in 0..3 {
            for k in 0..3 {
                if j != k {
                    assert_ne!(&us[j] * &p.t, us[k]);
                }
            }
        }
    }
}
