//! Check and suite reports: one record per verified identity, with exact
//! or numeric expected/actual values, renderable as text or JSON.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One verified identity: what was checked, against which stated relation,
/// and how close the two sides came. `tolerance` is zero for exact checks.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub paper_ref: String,
    pub status: CheckStatus,
    pub expected: String,
    pub actual: String,
    pub tolerance: f64,
}

impl CheckReport {
    /// An exact check: passes iff the two value strings are equal.
    pub fn exact(name: &str, reference: &str, expected: String, actual: String) -> Self {
        let status = if expected == actual { CheckStatus::Pass } else { CheckStatus::Fail };
        CheckReport {
            name: name.to_string(),
            paper_ref: reference.to_string(),
            status,
            expected,
            actual,
            tolerance: 0.0,
        }
    }

    /// A numeric check: passes iff the recorded deviation is within `tol`.
    pub fn numeric(
        name: &str,
        reference: &str,
        expected: String,
        actual: String,
        deviation: f64,
        tol: f64,
    ) -> Self {
        let status = if deviation <= tol { CheckStatus::Pass } else { CheckStatus::Fail };
        CheckReport {
            name: name.to_string(),
            paper_ref: reference.to_string(),
            status,
            expected,
            actual,
            tolerance: tol,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = match self.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
        };
        write!(
            f,
            "[{mark}] {}: expected {}, got {}",
            self.name, self.expected, self.actual
        )?;
        if self.tolerance > 0.0 {
            write!(f, " (tolerance {:.3e})", self.tolerance)?;
        }
        if self.status == CheckStatus::Fail {
            write!(f, " [violates: {}]", self.paper_ref)?;
        }
        Ok(())
    }
}

/// All checks of one named suite at one rank.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub checks: Vec<CheckReport>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn new(suite: &str, n: usize) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            n,
            checks: Vec::new(),
            passed: true,
        }
    }

    pub fn push(&mut self, check: CheckReport) {
        self.passed &= check.passed();
        self.checks.push(check);
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("suite {} (n = {})\n", self.suite, self.n);
        for check in &self.checks {
            out.push_str(&format!("  {check}\n"));
        }
        let verdict = if self.passed { "passed" } else { "FAILED" };
        out.push_str(&format!(
            "  {} checks, {verdict}\n",
            self.checks.len()
        ));
        out
    }
}
