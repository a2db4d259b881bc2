//! JSON forms of polynomials, rational functions and scalars.
//!
//! ```json
//! {"vars": ["t", "u1"], "terms": [{"coeff": "-3/2", "exps": [1, 2]}]}
//! ```
//! Terms are listed in ascending graded-lex order.

use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{Monomial, MultiPoly, RatFunc, RingError, Scalar, VarTable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RatFuncJson {
    pub num: PolyJson,
    pub den: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", content = "value", rename_all = "lowercase")]
pub enum ScalarJson {
    Exact(RatFuncJson),
    Eval(String),
}

pub fn parse_rational(s: &str) -> Result<BigRational, RingError> {
    let s = s.trim();
    let ok = !s.is_empty() && s.chars().all(|c| c.is_ascii_digit() || c == '/' || c == '-');
    if !ok {
        return Err(RingError::Parse(format!("bad rational `{s}`")));
    }
    let q = BigRational::from_str(s).map_err(|e| RingError::Parse(format!("bad rational `{s}`: {e}")))?;
    Ok(q)
}

impl MultiPoly {
    pub fn to_json(&self) -> PolyJson {
        let table = VarTable::from_vars(self.vars()).expect("distinct vars");
        let terms = self
            .terms()
            .iter()
            .rev()
            .map(|(m, c)| TermJson { coeff: c.to_string(), exps: table.vars().iter().map(|&v| m.exponent(v)).collect() })
            .collect();
        PolyJson { vars: table.names(), terms }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self, RingError> {
        let table = VarTable::from_names(&j.vars)?;
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            if t.exps.len() != table.len() {
                return Err(RingError::VarTableMismatch(format!(
                    "term has {} exponents for {} variables",
                    t.exps.len(),
                    table.len()
                )));
            }
            let m = Monomial::from_pairs(table.vars().iter().copied().zip(t.exps.iter().copied()));
            terms.push((m, parse_rational(&t.coeff)?));
        }
        Ok(MultiPoly::from_terms(terms))
    }
}

impl RatFunc {
    pub fn to_json(&self) -> RatFuncJson {
        RatFuncJson { num: self.numer().to_json(), den: self.denom().to_json() }
    }

    pub fn from_json(j: &RatFuncJson) -> Result<Self, RingError> {
        RatFunc::new(MultiPoly::from_json(&j.num)?, MultiPoly::from_json(&j.den)?)
    }
}

impl Scalar {
    pub fn to_json(&self) -> ScalarJson {
        match self {
            Scalar::Exact(r) => ScalarJson::Exact(r.to_json()),
            Scalar::Eval(q) => ScalarJson::Eval(q.to_string()),
        }
    }

    pub fn from_json(j: &ScalarJson) -> Result<Self, RingError> {
        Ok(match j {
            ScalarJson::Exact(r) => Scalar::Exact(RatFunc::from_json(r)?),
            ScalarJson::Eval(s) => Scalar::Eval(parse_rational(s)?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Var;

    #[test]
    fn poly_json_layout() {
        let p = &MultiPoly::var(Var::T) * &MultiPoly::var(Var::u(1)) - MultiPoly::from_int(3);
        let j = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(j, r#"{"vars":["t","u1"],"terms":[{"coeff":"-3","exps":[0,0]},{"coeff":"1","exps":[1,1]}]}"#);
        let back: PolyJson = serde_json::from_str(&j).unwrap();
        assert_eq!(MultiPoly::from_json(&back).unwrap(), p);
    }

    #[test]
    fn mismatched_exponent_vector_rejected() {
        let j = PolyJson { vars: vec!["t".into()], terms: vec![TermJson { coeff: "1".into(), exps: vec![1, 2] }] };
        assert!(matches!(MultiPoly::from_json(&j), Err(RingError::VarTableMismatch(_))));
        let j = PolyJson { vars: vec!["zz".into()], terms: vec![] };
        assert!(MultiPoly::from_json(&j).is_err());
    }

    #[test]
    fn bad_coefficient_rejected() {
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert_eq!(parse_rational("-6/4").unwrap(), BigRational::new((-3).into(), 2.into()));
    }
}
