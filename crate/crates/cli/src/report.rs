//! Run reports: human tables and the JSON schema.

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(name: &str, content: &[u8]) -> Self {
        InputDigest {
            name: name.to_string(),
            sha256: hex::encode(Sha256::digest(content)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResultRow {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub results: Vec<ResultRow>,
    pub checks: Vec<CheckRow>,
    pub warnings: Vec<String>,
    pub wall_time_seconds: f64,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            command,
            ..Default::default()
        }
    }

    pub fn input(&mut self, digest: InputDigest) {
        if !self.inputs.iter().any(|d| d.name == digest.name) {
            self.inputs.push(digest);
        }
    }

    pub fn result(&mut self, name: impl Into<String>, value: impl ToString) {
        self.results.push(ResultRow {
            name: name.into(),
            value: value.to_string(),
        });
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckRow {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn to_table(&self) -> String {
        let width = self
            .results
            .iter()
            .map(|r| r.name.chars().count())
            .chain(self.checks.iter().map(|c| c.name.chars().count()))
            .max()
            .unwrap_or(0);
        let pad = |s: &str| {
            let n = s.chars().count();
            format!("{s}{}", " ".repeat(width.saturating_sub(n)))
        };
        let mut out = String::new();
        out.push_str(&format!("command  {}\n", self.command.join(" ")));
        for d in &self.inputs {
            out.push_str(&format!("input    {}  sha256:{}\n", d.name, &d.sha256[..16]));
        }
        if !self.results.is_empty() {
            out.push('\n');
            for r in &self.results {
                out.push_str(&format!("  {}  {}\n", pad(&r.name), r.value));
            }
        }
        if !self.checks.is_empty() {
            out.push('\n');
            for c in &self.checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                let line = format!("  {}  {mark}  {}", pad(&c.name), c.detail);
                out.push_str(line.trim_end());
                out.push('\n');
            }
        }
        if !self.warnings.is_empty() {
            out.push('\n');
            for w in &self.warnings {
                out.push_str(&format!("warning: {w}\n"));
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push('\n');
        if self.checks.is_empty() {
            out.push_str("no checks");
        } else if failed == 0 {
            out.push_str(&format!("{} checks passed", self.checks.len()));
        } else {
            out.push_str(&format!("{failed} of {} checks FAILED", self.checks.len()));
        }
        out.push_str(&format!(" ({:.3} s)\n", self.wall_time_seconds));
        out
    }
}
