use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::monomial_text;
use super::{Monomial, MultiPoly, RingError, Var};

/// A quotient of multivariate polynomials.
///
/// The denominator is kept partially factored: a monomial times a product of
/// monic, monomial-free polynomial factors with multiplicities. All
/// rational content lives in the numerator, so the expanded denominator
/// always has leading coefficient +1. After every operation, denominator
/// factors that divide the numerator are cancelled by trial division; no
/// multivariate gcd is attempted, so two equal values may differ in
/// representation. Equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RatFunc {
    num: MultiPoly,
    den_mono: Monomial,
    den_factors: Vec<(MultiPoly, u32)>,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc { num: p, den_mono: Monomial::one(), den_factors: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(MultiPoly::from_int(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    /// `num / den`, with the zero-denominator check.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(RatFunc::from_poly(num).mul_ref(&RatFunc::from_poly(den).try_inv()?))
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    /// Expanded denominator (leading coefficient +1).
    pub fn denom(&self) -> MultiPoly {
        let mut d = MultiPoly::monomial(self.den_mono.clone(), BigRational::one());
        for (f, e) in &self.den_factors {
            d = d.mul_ref(&f.pow(*e));
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den_mono.is_one() && self.den_factors.is_empty()
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs = self.num.vars();
        vs.extend(self.den_mono.pairs().iter().map(|p| p.0));
        for (f, _) in &self.den_factors {
            vs.extend(f.vars());
        }
        vs.sort();
        vs.dedup();
        vs
    }

    fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            self.den_mono = Monomial::one();
            self.den_factors.clear();
            return self;
        }
        if !self.den_mono.is_one() {
            let g = self.num.monomial_content().gcd(&self.den_mono);
            if !g.is_one() {
                self.num = self.num.div_exact(&MultiPoly::monomial(g.clone(), BigRational::one())).expect("monomial content");
                self.den_mono = self.den_mono.div(&g).expect("gcd divides");
            }
        }
        if !self.den_factors.is_empty() && self.num.len() > 1 {
            for (f, e) in self.den_factors.iter_mut() {
                while *e > 0 && self.num.total_degree() >= f.total_degree() {
                    match self.num.div_exact(f) {
                        Some(q) => {
                            self.num = q;
                            *e -= 1;
                        }
                        None => break,
                    }
                }
            }
            self.den_factors.retain(|(_, e)| *e > 0);
        }
        self
    }

    fn insert_factor(factors: &mut Vec<(MultiPoly, u32)>, f: MultiPoly, e: u32) {
        if e == 0 {
            return;
        }
        match factors.binary_search_by(|(g, _)| factor_cmp(g, &f)) {
            Ok(i) => factors[i].1 += e,
            Err(i) => factors.insert(i, (f, e)),
        }
    }

    pub fn mul_ref(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let mut factors = self.den_factors.clone();
        for (f, e) in &other.den_factors {
            Self::insert_factor(&mut factors, f.clone(), *e);
        }
        RatFunc { num: self.num.mul_ref(&other.num), den_mono: self.den_mono.mul(&other.den_mono), den_factors: factors }
            .normalize()
    }

    fn combine(&self, other: &RatFunc, negate: bool) -> RatFunc {
        if self.den_mono == other.den_mono && self.den_factors == other.den_factors {
            let num = if negate { self.num.sub_ref(&other.num) } else { self.num.add_ref(&other.num) };
            return RatFunc { num, den_mono: self.den_mono.clone(), den_factors: self.den_factors.clone() }.normalize();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg_ref() } else { other.clone() };
        }
        let lcm_mono = self.den_mono.lcm(&other.den_mono);
        let mut lcm: Vec<(MultiPoly, u32)> = self.den_factors.clone();
        for (f, e) in &other.den_factors {
            match lcm.binary_search_by(|(g, _)| factor_cmp(g, f)) {
                Ok(i) => lcm[i].1 = lcm[i].1.max(*e),
                Err(i) => lcm.insert(i, (f.clone(), *e)),
            }
        }
        let cofactor = |r: &RatFunc| -> MultiPoly {
            let mono = lcm_mono.div(&r.den_mono).expect("lcm");
            let mut p = MultiPoly::monomial(mono, BigRational::one());
            for (f, e) in &lcm {
                let have = r
                    .den_factors
                    .binary_search_by(|(g, _)| factor_cmp(g, f))
                    .map(|i| r.den_factors[i].1)
                    .unwrap_or(0);
                if *e > have {
                    p = p.mul_ref(&f.pow(e - have));
                }
            }
            p
        };
        let a = self.num.mul_ref(&cofactor(self));
        let b = other.num.mul_ref(&cofactor(other));
        let num = if negate { a.sub_ref(&b) } else { a.add_ref(&b) };
        RatFunc { num, den_mono: lcm_mono, den_factors: lcm }.normalize()
    }

    pub fn add_ref(&self, other: &RatFunc) -> RatFunc {
        self.combine(other, false)
    }

    pub fn sub_ref(&self, other: &RatFunc) -> RatFunc {
        self.combine(other, true)
    }

    pub fn neg_ref(&self) -> RatFunc {
        RatFunc { num: -&self.num, den_mono: self.den_mono.clone(), den_factors: self.den_factors.clone() }
    }

    pub fn try_inv(&self) -> Result<RatFunc, RingError> {
        if self.num.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let (coeff, mono, prim) = self.num.split_monic();
        let mut num = self.denom().scale(&coeff.recip());
        let mut factors = Vec::new();
        if prim.len() > 1 {
            factors.push((prim, 1));
        }
        if num.len() > 1 && !factors.is_empty() {
            // the expanded denominator may share the new factor
            if let Some(q) = num.div_exact(&factors[0].0) {
                num = q;
                factors.clear();
            }
        }
        Ok(RatFunc { num, den_mono: mono, den_factors: factors }.normalize())
    }

    pub fn try_div(&self, other: &RatFunc) -> Result<RatFunc, RingError> {
        Ok(self.mul_ref(&other.try_inv()?))
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        if e == 0 {
            return RatFunc::one();
        }
        RatFunc {
            num: self.num.pow(e),
            den_mono: self.den_mono.pow(e),
            den_factors: self.den_factors.iter().map(|(f, x)| (f.clone(), x * e)).collect(),
        }
    }

    /// Exact quotient: the divisor's non-monomial numerator part must divide
    /// this numerator as polynomials.
    pub fn exact_quotient(&self, divisor: &RatFunc) -> Result<RatFunc, RingError> {
        if divisor.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(RatFunc::zero());
        }
        let (coeff, mono, prim) = divisor.num.split_monic();
        let num = if prim.len() > 1 { self.num.div_exact(&prim).ok_or(RingError::NonExactDivision)? } else { self.num.clone() };
        let partial = RatFunc { num, den_mono: self.den_mono.clone(), den_factors: self.den_factors.clone() };
        let rest = RatFunc { num: divisor.denom().scale(&coeff.recip()), den_mono: mono, den_factors: Vec::new() }.normalize();
        Ok(partial.mul_ref(&rest))
    }

    /// Simultaneous substitution of rational functions for variables.
    pub fn substitute(&self, bindings: &BTreeMap<Var, RatFunc>) -> Result<RatFunc, RingError> {
        let num = substitute_poly(&self.num, bindings);
        let mut den = substitute_poly(&MultiPoly::monomial(self.den_mono.clone(), BigRational::one()), bindings);
        for (f, e) in &self.den_factors {
            let fs = substitute_poly(f, bindings);
            if fs.is_zero() {
                return Err(RingError::ZeroDenominator);
            }
            den = den.mul_ref(&fs.pow(*e));
        }
        num.try_div(&den).map_err(|_| RingError::ZeroDenominator)
    }

    /// Evaluates at a rational point covering every occurring variable.
    pub fn eval(&self, point: &BTreeMap<Var, BigRational>) -> Result<BigRational, RingError> {
        let n = self.num.eval(point)?;
        let d = self.denom().eval(point)?;
        if d.is_zero() {
            return Err(RingError::ZeroDenominator);
        }
        Ok(n / d)
    }

    /// Degree in `v` when this is a polynomial in `v` (denominator free of `v`).
    pub fn poly_degree_in(&self, v: Var) -> Option<u32> {
        if self.den_mono.exponent(v) > 0 || self.den_factors.iter().any(|(f, _)| f.degree_in(v) > 0) {
            return None;
        }
        Some(self.num.degree_in(v))
    }

    /// Human-readable form with monomial and rational content pulled out of
    /// numerator and denominator, e.g. `(1-t)*c*u1`.
    pub fn to_text(&self) -> String {
        let num = factored_text(&self.num);
        if self.is_polynomial() {
            return num;
        }
        let mut parts: Vec<String> = Vec::new();
        for (f, e) in &self.den_factors {
            let s = format!("({})", f.to_text());
            parts.push(if *e == 1 { s } else { format!("{s}^{e}") });
        }
        if !self.den_mono.is_one() {
            parts.push(monomial_text(&self.den_mono));
        }
        let den = parts.join("*");
        let num = if num.contains(['+', '*']) || num[1..].contains('-') { format!("({num})") } else { num };
        if parts.len() == 1 && !den.contains('^') {
            format!("{num}/{den}")
        } else {
            format!("{num}/({den})")
        }
    }
}

/// Renders `p` as `[sign][content*](primitive)*monomial`, choosing the sign
/// so the first displayed term of the primitive part is positive.
fn factored_text(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mono = p.monomial_content();
    let mut content = p.content();
    let lowest = &p.terms().last().expect("nonzero").1;
    if lowest.is_negative() {
        content = -content;
    }
    let inv = content.recip();
    let prim = MultiPoly::from_terms(
        p.terms().iter().map(|(m, c)| (m.div(&mono).expect("content"), c * &inv)),
    );
    let mut factors: Vec<String> = Vec::new();
    let abs = content.abs();
    if !abs.is_one() {
        factors.push(abs.to_string());
    }
    if !prim.is_one() {
        factors.push(if prim.len() > 1 { format!("({})", prim.to_text()) } else { prim.to_text() });
    }
    if !mono.is_one() {
        factors.push(monomial_text(&mono));
    }
    let body = if factors.is_empty() { "1".to_string() } else { factors.join("*") };
    if content.is_negative() {
        format!("-{body}")
    } else {
        body
    }
}

fn factor_cmp(a: &MultiPoly, b: &MultiPoly) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        for ((ma, ca), (mb, cb)) in a.terms().iter().zip(b.terms()) {
            let o = ma.cmp(mb).then_with(|| ca.cmp(cb));
            if o != std::cmp::Ordering::Equal {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    })
}

fn substitute_poly(p: &MultiPoly, bindings: &BTreeMap<Var, RatFunc>) -> RatFunc {
    let mut cache: BTreeMap<(Var, u32), RatFunc> = BTreeMap::new();
    let mut acc = RatFunc::zero();
    for (m, c) in p.terms() {
        let mut term = RatFunc::constant(c.clone());
        let mut free = Vec::new();
        for &(v, e) in m.pairs() {
            match bindings.get(&v) {
                Some(r) => {
                    let pw = cache.entry((v, e)).or_insert_with(|| r.pow(e)).clone();
                    term = term.mul_ref(&pw);
                }
                None => free.push((v, e)),
            }
        }
        if !free.is_empty() {
            term = term.mul_ref(&RatFunc::from_poly(MultiPoly::monomial(Monomial::from_pairs(free), BigRational::one())));
        }
        acc = acc.add_ref(&term);
    }
    acc
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den_mono == other.den_mono && self.den_factors == other.den_factors {
            return self.num == other.num;
        }
        // cross-multiplication
        self.num.mul_ref(&other.denom()) == other.num.mul_ref(&self.denom())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        self.add_ref(&rhs)
    }
}

impl<'a> Add<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        self.add_ref(rhs)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self.sub_ref(&rhs)
    }
}

impl<'a> Sub<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self.sub_ref(rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        self.mul_ref(rhs)
    }
}

/// Panics on division by zero; use [`RatFunc::try_div`] for a checked form.
impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: RatFunc) -> RatFunc {
        self.try_div(&rhs).expect("division by zero rational function")
    }
}

impl<'a> Div<&'a RatFunc> for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &'a RatFunc) -> RatFunc {
        self.try_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den_mono: self.den_mono, den_factors: self.den_factors }
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = self.sub_ref(rhs);
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = self.mul_ref(rhs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> RatFunc {
        RatFunc::var(x)
    }

    #[test]
    fn cancels_common_linear_factor() {
        let (u1, u2) = (v(Var::u(1)), v(Var::u(2)));
        let diff = u1.clone() - &u2;
        let r = (u1.clone() * &u1 - u2.clone() * &u2) / diff;
        assert!(r.is_polynomial());
        assert_eq!(r, u1 + u2);
    }

    #[test]
    fn sum_of_fractions_reduces() {
        let (u1, u2) = (v(Var::u(1)), v(Var::u(2)));
        let d = u1.clone() - &u2;
        // u1/(u1-u2) - u2/(u1-u2) = 1
        let r = u1 / d.clone() - u2 / d;
        assert_eq!(r, RatFunc::one());
        assert!(r.is_polynomial());
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let (a, b) = (v(Var::A), v(Var::B));
        let x = a.clone() / b.clone();
        let y = (a.clone() * &a) / (a.clone() * &b);
        assert_eq!(x, y);
        assert_ne!(x, b / a);
    }

    #[test]
    fn denominator_leading_coefficient_is_one() {
        let r = RatFunc::new(MultiPoly::one(), MultiPoly::from_int(-3) * MultiPoly::var(Var::u(1))).unwrap();
        let den = r.denom();
        assert!(den.leading_coeff().unwrap().is_one());
        assert_eq!(r * RatFunc::var(Var::u(1)), RatFunc::constant(BigRational::new((-1).into(), 3.into())));
    }

    #[test]
    fn substitution_examples() {
        let (a, b, t, beta, u) = (v(Var::A), v(Var::B), v(Var::T), v(Var::BETA), v(Var::u(1)));
        let p = a.clone() * &u + &b;
        let mut bind = BTreeMap::new();
        bind.insert(Var::A, RatFunc::one());
        bind.insert(Var::B, t.clone() * &beta);
        assert_eq!(p.substitute(&bind).unwrap(), u.clone() + t.clone() * &beta);
        assert_eq!(p.substitute(&BTreeMap::new()).unwrap(), p);
        let q = t.clone() * &u - v(Var::u(2));
        let mut bind = BTreeMap::new();
        bind.insert(Var::T, RatFunc::zero());
        assert_eq!(q.substitute(&bind).unwrap(), -v(Var::u(2)));
    }

    #[test]
    fn substitution_into_zero_denominator_fails() {
        let (t, u) = (v(Var::T), v(Var::u(1)));
        let r = u / t;
        let mut bind = BTreeMap::new();
        bind.insert(Var::T, RatFunc::zero());
        assert_eq!(r.substitute(&bind), Err(RingError::ZeroDenominator));
    }

    #[test]
    fn exact_quotient_checks_divisibility() {
        let (u1, u2) = (v(Var::u(1)), v(Var::u(2)));
        let num = (u1.clone() * &u1 - u2.clone() * &u2) / v(Var::A);
        let q = num.exact_quotient(&(u1.clone() - &u2)).unwrap();
        assert_eq!(q, (u1.clone() + &u2) / v(Var::A));
        assert_eq!(u1.exact_quotient(&(u1.clone() + &u2)), Err(RingError::NonExactDivision));
    }

    #[test]
    fn text_pulls_out_content() {
        let (t, c, u) = (v(Var::T), v(Var::C), v(Var::u(1)));
        let r = (RatFunc::one() - t) * c * u;
        assert_eq!(r.to_text(), "(1-t)*c*u1");
        let x = RatFunc::one() / v(Var::A);
        assert_eq!(x.to_text(), "1/a");
    }
}
