//! Validation reports and the exhaustive law checker that fills them.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::algebra::ElementId;

/// Outcome of checking one law over every tuple of a universe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub axiom: String,
    pub pass: bool,
    /// Names of the first falsifying tuple, empty when the check passes.
    pub witness: Vec<String>,
    #[serde(skip)]
    pub witness_ids: Vec<ElementId>,
    /// Human-readable rendering of the falsified instance.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Set when the law is a theorem of the axioms already verified, so a
    /// failure means the toolkit or its input is inconsistent.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub fatal: bool,
}

impl Check {
    pub fn passed(axiom: impl Into<String>) -> Self {
        Check {
            axiom: axiom.into(),
            pass: true,
            witness: Vec::new(),
            witness_ids: Vec::new(),
            detail: None,
            fatal: false,
        }
    }

    pub fn failed(
        axiom: impl Into<String>,
        witness_ids: Vec<ElementId>,
        witness: Vec<String>,
        detail: impl Into<String>,
    ) -> Self {
        Check {
            axiom: axiom.into(),
            pass: false,
            witness,
            witness_ids,
            detail: Some(detail.into()),
            fatal: false,
        }
    }

    /// A verdict with no tuple to report, such as a bijection count.
    pub fn verdict(axiom: impl Into<String>, pass: bool, detail: Option<String>) -> Self {
        Check {
            axiom: axiom.into(),
            pass,
            witness: Vec::new(),
            witness_ids: Vec::new(),
            detail,
            fatal: false,
        }
    }

    pub fn as_theorem(mut self) -> Self {
        self.fatal = true;
        self
    }

    /// A failed theorem check.
    pub fn is_violation(&self) -> bool {
        self.fatal && !self.pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub kind: String,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(kind: impl Into<String>) -> Self {
        Report {
            kind: kind.into(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn has_violation(&self) -> bool {
        self.checks.iter().any(Check::is_violation)
    }

    pub fn get(&self, axiom: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn passes(&self, axiom: &str) -> bool {
        self.get(axiom).is_some_and(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Detail of the first failing check, falling back to its axiom id.
    pub fn first_failure(&self) -> Option<&str> {
        self.failures()
            .next()
            .map(|c| c.detail.as_deref().unwrap_or(c.axiom.as_str()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.kind)?;
        for c in &self.checks {
            let status = match (c.pass, c.fatal) {
                (true, _) => "pass",
                (false, false) => "FAIL",
                (false, true) => "VIOLATION",
            };
            write!(f, "  {:<10} {status}", c.axiom)?;
            if !c.witness.is_empty() {
                write!(f, "  witness ({})", c.witness.join(", "))?;
            }
            if let Some(d) = &c.detail {
                write!(f, "  {d}")?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// A law quantified over `arity` elements. `eval` returns `None` when the
/// law holds at a tuple and a rendering of the falsified instance otherwise.
pub struct Law<'a> {
    pub id: String,
    pub arity: usize,
    pub theorem: bool,
    eval: Box<dyn Fn(&[ElementId]) -> Option<String> + Sync + 'a>,
}

impl<'a> Law<'a> {
    pub fn new(
        id: impl Into<String>,
        arity: usize,
        eval: impl Fn(&[ElementId]) -> Option<String> + Sync + 'a,
    ) -> Self {
        Law {
            id: id.into(),
            arity,
            theorem: false,
            eval: Box::new(eval),
        }
    }

    pub fn theorem(mut self) -> Self {
        self.theorem = true;
        self
    }

    /// Evaluates the law at one tuple.
    pub fn falsified_at(&self, tuple: &[ElementId]) -> Option<String> {
        (self.eval)(tuple)
    }

    /// Scans all tuples lexicographically and records the first failure.
    pub fn check(&self, size: usize, names: &[String]) -> Check {
        let found = if self.arity == 0 {
            self.falsified_at(&[]).map(|d| (Vec::new(), d))
        } else {
            (0..self.arity)
                .map(|_| 0..size)
                .multi_cartesian_product()
                .find_map(|t| self.falsified_at(&t).map(|d| (t, d)))
        };
        let check = match found {
            None => Check::passed(self.id.clone()),
            Some((tuple, detail)) => {
                let witness = tuple.iter().map(|&x| names[x].clone()).collect();
                Check::failed(self.id.clone(), tuple, witness, detail)
            }
        };
        if self.theorem {
            check.as_theorem()
        } else {
            check
        }
    }
}

/// Runs every law of a suite and collects the checks into a report.
pub fn run_laws(kind: &str, laws: &[Law<'_>], size: usize, names: &[String]) -> Report {
    let mut report = Report::new(kind);
    for law in laws {
        report.push(law.check(size, names));
    }
    report
}

/// Helper for rendering an inequality failure `lhs ≰ rhs`.
pub fn not_leq(lhs: impl fmt::Display, rhs: impl fmt::Display) -> String {
    format!("{lhs} ≰ {rhs}")
}
