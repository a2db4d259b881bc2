//! Variable identifiers and the canonical variable table.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::RingError;

const U_BASE: u32 = 16;
const W_BASE: u32 = 4096;

/// A polynomial variable.
///
/// Ids are global and fixed so that polynomials built in different places
/// always agree on variable identity. The numeric order of ids is the
/// canonical variable order: `t, a, b, c, d, e, f, beta, u1.., w1..`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Var(u32);

impl Var {
    pub const T: Var = Var(0);
    pub const A: Var = Var(1);
    pub const B: Var = Var(2);
    pub const C: Var = Var(3);
    pub const D: Var = Var(4);
    pub const E: Var = Var(5);
    pub const F: Var = Var(6);
    pub const BETA: Var = Var(7);

    /// Spectral parameter `u_j`, 1-based.
    pub fn u(j: usize) -> Var {
        assert!(j >= 1 && (j as u32) < W_BASE - U_BASE, "spectral index out of range: {j}");
        Var(U_BASE + j as u32)
    }

    /// Inhomogeneity `w_j`, 1-based.
    pub fn w(j: usize) -> Var {
        assert!(j >= 1, "inhomogeneity index out of range: {j}");
        Var(W_BASE + j as u32)
    }

    pub fn id(self) -> u32 {
        self.0
    }

    pub fn name(self) -> String {
        match self.0 {
            0 => "t".into(),
            1 => "a".into(),
            2 => "b".into(),
            3 => "c".into(),
            4 => "d".into(),
            5 => "e".into(),
            6 => "f".into(),
            7 => "beta".into(),
            n if (U_BASE + 1..W_BASE).contains(&n) => format!("u{}", n - U_BASE),
            n if n > W_BASE => format!("w{}", n - W_BASE),
            n => format!("x{n}"),
        }
    }

    pub fn parse(name: &str) -> Option<Var> {
        let fixed = match name {
            "t" => Some(Var::T),
            "a" => Some(Var::A),
            "b" => Some(Var::B),
            "c" => Some(Var::C),
            "d" => Some(Var::D),
            "e" => Some(Var::E),
            "f" => Some(Var::F),
            "beta" | "β" => Some(Var::BETA),
            _ => None,
        };
        if fixed.is_some() {
            return fixed;
        }
        let index = |rest: &str| rest.parse::<usize>().ok().filter(|&j| j >= 1);
        if let Some(rest) = name.strip_prefix('u') {
            return index(rest).filter(|&j| (j as u32) < W_BASE - U_BASE).map(Var::u);
        }
        if let Some(rest) = name.strip_prefix('w') {
            return index(rest).map(Var::w);
        }
        None
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// An ordered list of distinct variables.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VarTable {
    vars: Vec<Var>,
}

impl VarTable {
    /// `t, a, b, c, d, e, f, beta, u1..u_n_u, w1..w_n_w`.
    pub fn standard(n_u: usize, n_w: usize) -> Self {
        let mut vars = vec![Var::T, Var::A, Var::B, Var::C, Var::D, Var::E, Var::F, Var::BETA];
        vars.extend((1..=n_u).map(Var::u));
        vars.extend((1..=n_w).map(Var::w));
        VarTable { vars }
    }

    pub fn from_vars(mut vars: Vec<Var>) -> Result<Self, RingError> {
        let len = vars.len();
        vars.sort();
        vars.dedup();
        if vars.len() != len {
            return Err(RingError::VarTableMismatch("duplicate variable".into()));
        }
        Ok(VarTable { vars })
    }

    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Self, RingError> {
        let vars = names
            .iter()
            .map(|n| {
                Var::parse(n.as_ref())
                    .ok_or_else(|| RingError::VarTableMismatch(format!("unknown variable `{}`", n.as_ref())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let len = vars.len();
        let mut sorted = vars.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != len {
            return Err(RingError::VarTableMismatch("duplicate variable".into()));
        }
        Ok(VarTable { vars })
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn index_of(&self, v: Var) -> Option<usize> {
        self.vars.iter().position(|&x| x == v)
    }

    pub fn names(&self) -> Vec<String> {
        self.vars.iter().map(|v| v.name()).collect()
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }
}
