use serde::{Deserialize, Serialize};

/// One named comparison in a [`VerifyReport`].
///
/// `measured` and `expected` are `None` for skipped checks and for checks
/// whose measurement could not be evaluated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub measured: Option<f64>,
    pub expected: Option<f64>,
    pub tol: f64,
    pub pass: bool,
    pub skipped: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

impl Check {
    /// `|measured − expected| ≤ tol`.
    pub fn within(name: &str, measured: f64, expected: f64, tol: f64) -> Self {
        let pass = (measured - expected).abs() <= tol;
        Self::with_pass(name, measured, expected, tol, pass)
    }

    /// `measured ≥ expected − tol`.
    pub fn at_least(name: &str, measured: f64, expected: f64, tol: f64) -> Self {
        let pass = measured >= expected - tol;
        Self::with_pass(name, measured, expected, tol, pass)
    }

    /// `measured ≤ expected + tol`.
    pub fn at_most(name: &str, measured: f64, expected: f64, tol: f64) -> Self {
        let pass = measured <= expected + tol;
        Self::with_pass(name, measured, expected, tol, pass)
    }

    pub fn with_pass(name: &str, measured: f64, expected: f64, tol: f64, pass: bool) -> Self {
        Self {
            name: name.to_owned(),
            measured: finite(measured),
            expected: finite(expected),
            tol,
            pass: pass && measured.is_finite(),
            skipped: false,
            note: None,
        }
    }

    pub fn skipped(name: &str, reason: &str) -> Self {
        Self {
            name: name.to_owned(),
            measured: None,
            expected: None,
            tol: 0.0,
            pass: true,
            skipped: true,
            note: Some(reason.to_owned()),
        }
    }

    pub fn failed(name: &str, reason: &str) -> Self {
        Self {
            name: name.to_owned(),
            measured: None,
            expected: None,
            tol: 0.0,
            pass: false,
            skipped: false,
            note: Some(reason.to_owned()),
        }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Ordered ledger of checks for one `α`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub alpha: f64,
    pub checks: Vec<Check>,
    /// Conjunction of every check's `pass`.
    pub overall: bool,
}

impl VerifyReport {
    pub fn new(alpha: f64) -> Self {
        Self {
            alpha,
            checks: Vec::new(),
            overall: false,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
        self.overall = self.checks.iter().all(|c| c.pass);
    }

    pub fn extend(&mut self, other: VerifyReport) {
        for c in other.checks {
            self.push(c);
        }
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}
