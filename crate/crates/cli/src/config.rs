// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use clap::ValueEnum;
use diffext::field::parse_ratfunc;
use diffext::{DerivationQ, Representation};
use serde::Serialize;

/// Number of variables of the base field `Q(t1, t2)`.
pub const NVARS: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Field,
    Cohomology,
    Cocycle1,
    Alpha,
    Extension,
    Commutator,
    Linearization,
    Char2,
    All,
}

impl Suite {
    /// Every concrete suite, in execution order.
    pub const CONCRETE: [Suite; 8] = [
        Suite::Field,
        Suite::Cohomology,
        Suite::Cocycle1,
        Suite::Alpha,
        Suite::Extension,
        Suite::Commutator,
        Suite::Linearization,
        Suite::Char2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Field => "field",
            Suite::Cohomology => "cohomology",
            Suite::Cocycle1 => "cocycle1",
            Suite::Alpha => "alpha",
            Suite::Extension => "extension",
            Suite::Commutator => "commutator",
            Suite::Linearization => "linearization",
            Suite::Char2 => "char2",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RepArg {
    Natural,
    Adjoint,
}

impl From<RepArg> for Representation {
    fn from(r: RepArg) -> Self {
        match r {
            RepArg::Natural => Representation::Natural,
            RepArg::Adjoint => Representation::Adjoint,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Everything that determines a report, echoed back in it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    #[serde(skip)]
    pub suite: Suite,
    pub samples: usize,
    pub seed: u64,
    pub degree_cap: u32,
    pub rep: RepArg,
    pub d1: String,
    pub d2: String,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            suite: Suite::All,
            samples: 50,
            seed: 0,
            degree_cap: 3,
            rep: RepArg::Natural,
            d1: "p1".into(),
            d2: "p2".into(),
        }
    }
}

impl RunConfig {
    pub fn with_suite(suite: Suite) -> Self {
        RunConfig {
            suite,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Parses a derivation of `Q(t1, t2)`: either an alias `p1`, `p2` (also
/// written `∂1`, `∂2`) for a formal partial, or a comma-separated list of
/// rational-function coefficients, so `"1,t1"` is `d/dt1 + t1 d/dt2`.
pub fn parse_derivation(spec: &str) -> Result<DerivationQ, UsageError> {
    let s = spec.trim();
    let bad = |why: String| UsageError(format!("invalid derivation {spec:?}: {why}"));
    let alias = s.strip_prefix('p').or_else(|| s.strip_prefix('∂'));
    if let Some(idx) = alias.and_then(|rest| rest.parse::<usize>().ok()) {
        if idx == 0 || idx > NVARS {
            return Err(bad(format!("expected p1..p{NVARS}")));
        }
        return DerivationQ::partial(idx - 1, NVARS).map_err(|e| bad(e.to_string()));
    }
    let coeffs = s
        .split(',')
        .map(parse_ratfunc)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| bad(e.to_string()))?;
    if coeffs.len() != NVARS {
        return Err(bad(format!(
            "expected {NVARS} coefficients, got {}",
            coeffs.len()
        )));
    }
    DerivationQ::new(coeffs).map_err(|e| bad(e.to_string()))
}
