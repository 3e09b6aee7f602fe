// SPDX-License-Identifier: Apache-2.0

//! The verification suites. Every case draws its inputs from a stream
//! seeded by the master seed and the case label, so cases are independent
//! of each other and of execution order.

mod alpha;
mod char2;
mod cocycle1;
mod cohomology;
mod commutator;
mod extension;
mod field;
mod linearization;

use std::time::Instant;

use diffext::groups::sample_sl2;
use diffext::rng::{derive_seed, rng_from_seed};
use diffext::{DerivationQ, GroupElementQ, Representation};
use rand_chacha::ChaCha8Rng;

use crate::config::{parse_derivation, RunConfig, Suite, UsageError, NVARS};
use crate::report::{Case, Report};

/// Inputs shared by the cases of one suite.
pub(crate) struct Ctx {
    suite: Suite,
    pub samples: usize,
    pub seed: u64,
    pub cap: u32,
    pub rep: Representation,
    pub d1: DerivationQ,
    pub d2: DerivationQ,
}

impl Ctx {
    fn for_suite(&self, suite: Suite) -> Ctx {
        Ctx {
            suite,
            samples: self.samples,
            seed: self.seed,
            cap: self.cap,
            rep: self.rep,
            d1: self.d1.clone(),
            d2: self.d2.clone(),
        }
    }

    pub fn seed_for(&self, label: &str) -> u64 {
        derive_seed(self.seed, &format!("{}/{label}", self.suite))
    }

    pub fn rng(&self, label: &str) -> ChaCha8Rng {
        rng_from_seed(self.seed_for(label))
    }

    /// `count` sampled elements of `SL2(Q(t1, t2))`.
    pub fn sl2(&self, label: &str, count: usize) -> Vec<GroupElementQ> {
        sample_sl2(self.seed_for(label), count, self.cap, NVARS)
    }

    /// Sampled elements pushed through `rep`.
    pub fn sl2_in(&self, label: &str, count: usize, rep: Representation) -> Vec<GroupElementQ> {
        self.sl2(label, count)
            .iter()
            .map(|g| rep.apply(g).expect("2x2 sample"))
            .collect()
    }
}

/// Runs `check` on `0..count`; the first `Some(witness)` or error fails the
/// case.
pub(crate) fn sampled<F>(name: impl Into<String>, count: usize, mut check: F) -> Case
where
    F: FnMut(usize) -> diffext::Result<Option<String>>,
{
    let name = name.into();
    for i in 0..count {
        match check(i) {
            Ok(None) => {}
            Ok(Some(w)) => return Case::fail(name, format!("sample {i}: {w}")),
            Err(e) => return Case::fail(name, format!("sample {i}: error: {e}")),
        }
    }
    Case::pass(name)
}

/// A single check; `Some(witness)` or an error fails it.
pub(crate) fn single<F>(name: impl Into<String>, check: F) -> Case
where
    F: FnOnce() -> diffext::Result<Option<String>>,
{
    let name = name.into();
    match check() {
        Ok(None) => Case::pass(name),
        Ok(Some(w)) => Case::fail(name, w),
        Err(e) => Case::fail(name, format!("error: {e}")),
    }
}

fn suite_cases(ctx: &Ctx) -> Vec<Case> {
    match ctx.suite {
        Suite::Field => field::cases(ctx),
        Suite::Cohomology => cohomology::cases(ctx),
        Suite::Cocycle1 => cocycle1::cases(ctx),
        Suite::Alpha => alpha::cases(ctx),
        Suite::Extension => extension::cases(ctx),
        Suite::Commutator => commutator::cases(ctx),
        Suite::Linearization => linearization::cases(ctx),
        Suite::Char2 => char2::cases(ctx),
        Suite::All => Suite::CONCRETE
            .iter()
            .flat_map(|&s| {
                suite_cases(&ctx.for_suite(s))
                    .into_iter()
                    .map(move |c| Case {
                        name: format!("{s}/{}", c.name),
                        ..c
                    })
            })
            .collect(),
    }
}

/// Runs the configured suite. Derivation specs are validated before any
/// case runs.
pub fn run(config: &RunConfig) -> Result<Report, UsageError> {
    let start = Instant::now();
    let ctx = Ctx {
        suite: config.suite,
        samples: config.samples,
        seed: config.seed,
        cap: config.degree_cap,
        rep: config.rep.into(),
        d1: parse_derivation(&config.d1)?,
        d2: parse_derivation(&config.d2)?,
    };
    let cases = suite_cases(&ctx);
    let elapsed = u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX);
    Ok(Report::new(config, cases, elapsed))
}
