use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_rational::BigRational;
use serde::Serialize;

use crate::lattice::ParamSet;
use crate::ring::Field;

/// How both sides of an identity are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Symbolic rational functions.
    Exact,
    /// Rational values at seeded random points.
    Eval,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Eval => "eval",
        })
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exact" => Ok(Mode::Exact),
            "eval" => Ok(Mode::Eval),
            _ => Err(format!("unknown mode `{s}` (expected exact or eval)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckName {
    Correspondence,
    Pairing,
    Branching,
    Degeneration,
    MpAlgebra,
    IkProperties,
    Rll,
    Ybe,
}

impl CheckName {
    pub const ALL: [CheckName; 8] = [
        CheckName::Correspondence,
        CheckName::Pairing,
        CheckName::Branching,
        CheckName::Degeneration,
        CheckName::MpAlgebra,
        CheckName::IkProperties,
        CheckName::Rll,
        CheckName::Ybe,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Correspondence => "correspondence",
            CheckName::Pairing => "pairing",
            CheckName::Branching => "branching",
            CheckName::Degeneration => "degeneration",
            CheckName::MpAlgebra => "mp-algebra",
            CheckName::IkProperties => "ik-properties",
            CheckName::Rll => "rll",
            CheckName::Ybe => "ybe",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

pub const DEFAULT_TRIALS: usize = 5;

/// One run of one check.
#[derive(Clone, Debug)]
pub struct CheckSpec {
    pub name: CheckName,
    pub m: usize,
    pub n: usize,
    pub mode: Mode,
    pub seed: u64,
    /// Random points in eval mode; ignored in exact mode.
    pub trials: usize,
    /// Fixed numeric parameters instead of sampled (eval) or symbolic (exact) ones.
    pub params: Option<ParamSet<BigRational>>,
}

impl CheckSpec {
    pub fn new(name: CheckName, m: usize, n: usize, mode: Mode) -> Self {
        CheckSpec { name, m, n, mode, seed: 0, trials: DEFAULT_TRIALS, params: None }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn params(mut self, params: ParamSet<BigRational>) -> Self {
        self.params = Some(params);
        self
    }
}

/// First failing comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub scope: String,
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

/// Comparison counts for one trial (or the single exact run).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub scope: String,
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: CheckName,
    pub pass: bool,
    pub mode: Mode,
    pub m: usize,
    pub n: usize,
    pub seed: u64,
    pub comparisons: usize,
    pub failures: usize,
    pub breakdown: Vec<Tally>,
    pub witness: Option<Witness>,
    /// Wall time in milliseconds.
    pub ms: u64,
}

impl CheckReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Collects comparisons for one scope.
#[derive(Debug)]
pub(crate) struct Recorder {
    tally: Tally,
    witness: Option<Witness>,
}

impl Recorder {
    pub fn new(scope: impl Into<String>) -> Self {
        Recorder { tally: Tally { scope: scope.into(), checked: 0, failed: 0 }, witness: None }
    }

    pub fn compare<F: Field>(&mut self, input: impl FnOnce() -> String, lhs: &F, rhs: &F) {
        let ok = lhs == rhs;
        self.record(ok, || (input(), lhs.to_string(), rhs.to_string()));
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> (String, String, String)) {
        self.tally.checked += 1;
        if !ok {
            self.tally.failed += 1;
            if self.witness.is_none() {
                let (input, lhs, rhs) = detail();
                self.witness = Some(Witness { scope: self.tally.scope.clone(), input, lhs, rhs });
            }
        }
    }
}

pub(crate) fn finish(spec: &CheckSpec, recorders: Vec<Recorder>, start: Instant) -> CheckReport {
    let comparisons = recorders.iter().map(|r| r.tally.checked).sum();
    let failures = recorders.iter().map(|r| r.tally.failed).sum::<usize>();
    let mut witness = None;
    let mut breakdown = Vec::with_capacity(recorders.len());
    for r in recorders {
        if witness.is_none() {
            witness = r.witness;
        }
        breakdown.push(r.tally);
    }
    CheckReport {
        name: spec.name,
        pass: failures == 0 && comparisons > 0,
        mode: spec.mode,
        m: spec.m,
        n: spec.n,
        seed: spec.seed,
        comparisons,
        failures,
        breakdown,
        witness,
        ms: start.elapsed().as_millis() as u64,
    }
}
