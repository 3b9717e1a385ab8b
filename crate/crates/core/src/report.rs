use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

/// One named check and, when it fails, a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// The outcome of a verification suite.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    /// Wall time; kept out of `Display` and JSON so output stays byte-deterministic.
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    started: Option<Instant>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport { suite: suite.into(), checks: Vec::new(), elapsed: Duration::ZERO, started: Some(Instant::now()) }
    }

    /// Record a check; `witness` is only evaluated on failure.
    pub fn check(&mut self, name: impl Into<String>, passed: bool, witness: impl FnOnce() -> String) {
        let witness = if passed { None } else { Some(witness()) };
        self.checks.push(Check { name: name.into(), passed, witness });
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn absorb(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn finish(mut self) -> Self {
        if let Some(t) = self.started.take() {
            self.elapsed = t.elapsed();
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Fraction-free summary, e.g. `12/12`.
    pub fn tally(&self) -> String {
        format!("{}/{}", self.checks.iter().filter(|c| c.passed).count(), self.checks.len())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}: {} checks passed", self.suite, self.tally())?;
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "  ok    {}", c.name)?,
                Some(w) => writeln!(f, "  FAIL  {}: {}", c.name, w)?,
            }
        }
        Ok(())
    }
}
