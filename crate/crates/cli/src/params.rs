use std::collections::BTreeMap;
use std::path::Path;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use vertexpoly::lattice::ParamSet;
use vertexpoly::ring::json::parse_rational;

use crate::CliError;

/// Free parameters on disk; `e` and `f` always follow from the constraints.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsFile {
    pub t: String,
    pub a: String,
    pub b: String,
    pub c: String,
    pub d: String,
}

impl ParamsFile {
    pub fn from_params(p: &ParamSet<BigRational>) -> Self {
        ParamsFile { t: p.t.to_string(), a: p.a.to_string(), b: p.b.to_string(), c: p.c.to_string(), d: p.d.to_string() }
    }

    pub fn to_params(&self) -> Result<ParamSet<BigRational>, CliError> {
        let q = |s: &str| parse_rational(s).map_err(|e| CliError::Usage(e.to_string()));
        ParamSet::from_free(q(&self.t)?, q(&self.a)?, q(&self.b)?, q(&self.c)?, q(&self.d)?)
            .map_err(|e| CliError::Usage(format!("parameter constraint violated: {e}")))
    }
}

pub fn load(path: &Path) -> Result<ParamSet<BigRational>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let raw: BTreeMap<String, serde_json::Value> =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    if raw.contains_key("e") || raw.contains_key("f") {
        return Err(CliError::Usage(
            "parameter constraint violated: e and f are fixed by cd + af = 0 and tcd + be = 0 and cannot be given".into(),
        ));
    }
    let file: ParamsFile = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    file.to_params()
}
