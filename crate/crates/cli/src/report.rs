// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write as _;

use serde::Serialize;

use crate::config::RunConfig;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Case {
    pub fn pass(name: impl Into<String>) -> Self {
        Case {
            name: name.into(),
            pass: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Case {
            name: name.into(),
            pass: false,
            witness: Some(witness.into()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub config: RunConfig,
    pub cases: Vec<Case>,
    pub passed: usize,
    pub failed: usize,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(config: &RunConfig, mut cases: Vec<Case>, elapsed_ms: u64) -> Self {
        cases.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = cases.iter().filter(|c| c.pass).count();
        Report {
            suite: config.suite.name().into(),
            config: config.clone(),
            failed: cases.len() - passed,
            passed,
            cases,
            elapsed_ms,
        }
    }

    pub fn case(&self, name: &str) -> Option<&Case> {
        self.cases.iter().find(|c| c.name == name)
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut out = String::new();
        let _ = writeln!(out, "suite {}", self.suite);
        let _ = writeln!(
            out,
            "config samples={} seed={} degree_cap={} rep={} d1={} d2={}",
            c.samples,
            c.seed,
            c.degree_cap,
            serde_json::to_value(c.rep)
                .expect("rep")
                .as_str()
                .unwrap_or("?"),
            c.d1,
            c.d2
        );
        for case in &self.cases {
            let _ = writeln!(
                out,
                "{} {}",
                if case.pass { "PASS" } else { "FAIL" },
                case.name
            );
            if let Some(w) = &case.witness {
                let _ = writeln!(out, "     witness: {w}");
            }
        }
        let _ = writeln!(
            out,
            "{} passed, {} failed in {} ms",
            self.passed, self.failed, self.elapsed_ms
        );
        out
    }
}
