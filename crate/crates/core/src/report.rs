//! Outcome of a verification suite.

use std::time::Duration;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    #[serde(serialize_with = "serialize_secs")]
    pub elapsed: Duration,
}

fn serialize_secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SuiteReport {
    pub fn new(name: impl Into<String>) -> Self {
        SuiteReport { name: name.into(), cases: 0, failures: Vec::new(), elapsed: Duration::ZERO }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one case; a failure is stored when `expected != actual`.
    pub fn check<T: PartialEq + std::fmt::Debug>(&mut self, case: impl FnOnce() -> String, expected: &T, actual: &T) {
        self.cases += 1;
        if expected != actual {
            self.failures.push(Failure {
                case: case(),
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }

    /// Records a case whose evaluation failed outright.
    pub fn error(&mut self, case: impl Into<String>, err: impl std::fmt::Display) {
        self.cases += 1;
        self.failures.push(Failure { case: case.into(), expected: "a value".into(), actual: format!("error: {err}") });
    }

    /// Folds another report's cases and failures into this one.
    pub fn absorb(&mut self, other: SuiteReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self.elapsed += other.elapsed;
    }
}
