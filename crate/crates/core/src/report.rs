//! Check records and analysis reports.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Fail => "FAIL",
        })
    }
}

/// One verdict with its evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    /// A claim compared against a computed value: disagreement is a warning.
    pub fn claim(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Warn },
            detail: detail.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", self.status, self.name, self.detail)
    }
}

/// Worst status in a list; `Pass` when empty.
pub fn worst(checks: &[Check]) -> Status {
    checks.iter().map(|c| c.status).max().unwrap_or(Status::Pass)
}

/// Why a run stopped early.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorKind {
    Parse,
    Cap,
    HypothesisViolated,
    Other,
}

/// One titled part of a report: free-form data plus its checks.
#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub name: String,
    pub data: serde_json::Value,
    pub checks: Vec<Check>,
}

impl Section {
    pub fn new(name: impl Into<String>, data: serde_json::Value) -> Self {
        Section {
            name: name.into(),
            data,
            checks: Vec::new(),
        }
    }

    pub fn with_checks(mut self, checks: Vec<Check>) -> Self {
        self.checks = checks;
        self
    }
}

/// Serializable record of a run. Contains no timings, so equal inputs give
/// byte-identical output.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub task: String,
    pub inputs: serde_json::Value,
    pub sections: Vec<Section>,
    pub status: Status,
    pub error: Option<String>,
    pub error_kind: Option<ErrorKind>,
    /// Graphs to dump alongside the report, by file stem.
    #[serde(skip)]
    pub artifacts: Vec<(String, crate::graph::Graph)>,
}

impl AnalysisReport {
    pub fn new(task: impl Into<String>, inputs: serde_json::Value) -> Self {
        AnalysisReport {
            task: task.into(),
            inputs,
            sections: Vec::new(),
            status: Status::Pass,
            error: None,
            error_kind: None,
            artifacts: Vec::new(),
        }
    }

    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
        self.status = self.status.max(self.worst());
    }

    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.sections.iter().flat_map(|s| s.checks.iter())
    }

    fn worst(&self) -> Status {
        self.checks().map(|c| c.status).max().unwrap_or(Status::Pass)
    }

    /// Marks the run as failed with `message`.
    pub fn fail(&mut self, kind: ErrorKind, message: impl Into<String>) {
        self.status = Status::Fail;
        self.error = Some(message.into());
        self.error_kind = Some(kind);
    }

    /// 0 ok, 2 check failed, 3 cap exceeded, 4 parse error.
    pub fn exit_code(&self) -> i32 {
        match self.error_kind {
            Some(ErrorKind::Parse) => 4,
            Some(ErrorKind::Cap) => 3,
            Some(_) => 2,
            None if self.status == Status::Fail => 2,
            None => 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
