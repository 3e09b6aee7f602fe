// SPDX-License-Identifier: Apache-2.0

//! Seeded verification suites over the `diffext` library, and the reports
//! they produce.

pub mod config;
pub mod report;
pub mod suites;

pub use config::{parse_derivation, OutputFormat, RepArg, RunConfig, Suite, UsageError};
pub use report::{Case, Report};
pub use suites::run;
