use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

/// Outcome of verifying one background: every condition the theory
/// requires appears as a check, failing ones carry a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub background: String,
    pub theory: String,
    pub checks: Vec<Check>,
    /// Computed quantities such as `|F|²`, `tr A` or kernel dimensions.
    pub invariants: BTreeMap<String, String>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(background: impl Into<String>, theory: impl Into<String>) -> Self {
        VerificationReport {
            background: background.into(),
            theory: theory.into(),
            checks: Vec::new(),
            invariants: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    /// Records a condition; `Err` carries the witness.
    pub fn check(&mut self, name: &str, outcome: Result<(), String>) {
        let (status, witness) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(w) => (Status::Fail, Some(w)),
        };
        self.checks.push(Check { name: name.to_string(), status, witness });
    }

    pub fn invariant(&mut self, name: &str, value: impl fmt::Display) {
        self.invariants.insert(name.to_string(), value.to_string());
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn status_of(&self, name: &str) -> Option<Status> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// Appends another report on the same background.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.invariants.extend(other.invariants);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "background {} ({})", self.background, self.theory)?;
        for c in &self.checks {
            match (&c.status, &c.witness) {
                (Status::Pass, _) => writeln!(f, "  [pass] {}", c.name)?,
                (Status::Fail, Some(w)) => writeln!(f, "  [FAIL] {}: {}", c.name, w)?,
                (Status::Fail, None) => writeln!(f, "  [FAIL] {}", c.name)?,
            }
        }
        for (k, v) in &self.invariants {
            writeln!(f, "  {k} = {v}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
