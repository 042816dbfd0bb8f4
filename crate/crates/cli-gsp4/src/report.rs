use std::fmt;

use deformation_ladder::{HypothesisReport, LiftLadder};
use serde::{Deserialize, Serialize};

use crate::config::Params;
use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Assumed,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Assumed => "ASSUMED",
        })
    }
}

/// One verified (or assumed) statement with the data that certifies it.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(default)]
    pub certificate: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            detail: detail.into(),
            certificate: Vec::new(),
        }
    }

    pub fn assumed(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Assumed, detail: detail.into(), certificate: Vec::new() }
    }

    pub fn with_certificate(mut self, lines: Vec<String>) -> Self {
        self.certificate = lines;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct GeneratorImage {
    pub generator: String,
    /// Row-major entries, rendered in the coefficient ring.
    pub rows: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct LadderStage {
    pub name: String,
    pub precision: u32,
    pub images: Vec<GeneratorImage>,
}

impl LadderStage {
    pub fn from_ladder(name: &str, l: &LiftLadder) -> Self {
        let images = l
            .gamma()
            .labels()
            .iter()
            .zip(l.images())
            .map(|(g, m)| GeneratorImage { generator: g.clone(), rows: m.render_rows() })
            .collect();
        LadderStage { name: name.to_string(), precision: l.precision(), images }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub format_version: u32,
    pub verb: String,
    #[serde(default)]
    pub assumed_not_verified: Vec<String>,
    #[serde(default)]
    pub params: Params,
    #[serde(default)]
    pub checks: Vec<Check>,
    #[serde(default)]
    pub ladder: Vec<LadderStage>,
}

impl Report {
    pub fn new(verb: &str, params: Params) -> Self {
        Report {
            format_version: FORMAT_VERSION,
            verb: verb.to_string(),
            assumed_not_verified: Vec::new(),
            params,
            checks: Vec::new(),
            ladder: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    /// Records an input taken on trust, both as a check and in the assumption list.
    pub fn assume(&mut self, name: &str, statement: &str) {
        self.assumed_not_verified.push(statement.to_string());
        self.checks.push(Check::assumed(name, statement));
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// True iff every check that is not an assumption passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    /// 0 when every non-assumed check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// Appends one check per evaluated condition and one assumed entry per global input.
    pub fn add_hypotheses(&mut self, h: &HypothesisReport) {
        for r in &h.results {
            let certificate = r.collisions.iter().map(|c| format!("collision: {c}")).collect();
            self.push(
                Check::new(format!("condition ({}) {}", r.id, r.name), r.verdict.passed, r.verdict.detail.clone())
                    .with_certificate(certificate),
            );
        }
        for (i, a) in h.assumptions.iter().enumerate() {
            self.assume(&format!("assumption {}", i + 1), a);
        }
    }

    pub fn to_toml(&self) -> Result<String, CliError> {
        toml::to_string(self).map_err(|e| CliError::Io { path: "<report>".into(), message: e.to_string() })
    }

    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::config("report", e.message().to_string()))
    }

    /// One line per check, for terminals.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s.push_str(&format!("[{}] {}: {}\n", c.status, c.name, c.detail));
            for line in &c.certificate {
                s.push_str(&format!("        {line}\n"));
            }
        }
        s
    }
}
