use std::fmt;
use std::time::Duration;

use serde::Serialize;

/// Resolved suite parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub degree: usize,
    pub instances: usize,
    pub seed: u64,
}

/// One failed case with its inputs and both computed values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of a suite. The JSON form leaves out the wall time so that equal
/// seeds give byte-identical reports.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Params,
    pub cases: usize,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        writeln!(
            f,
            "{}: {} ({} cases, {} failed; degree {}, instances {}, seed {}; {:.2?})",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.cases,
            self.failures.len(),
            p.degree,
            p.instances,
            p.seed,
            self.wall_time
        )?;
        for x in &self.failures {
            writeln!(f, "  case {}", x.case)?;
            if !x.inputs.is_empty() {
                writeln!(f, "    inputs:   {}", x.inputs)?;
            }
            writeln!(f, "    expected: {}", x.expected)?;
            writeln!(f, "    actual:   {}", x.actual)?;
        }
        Ok(())
    }
}

/// Collects cases; failures are sorted by case key when the report is built.
#[derive(Default)]
pub(crate) struct Recorder {
    pub(crate) cases: usize,
    pub(crate) failures: Vec<Failure>,
}

impl Recorder {
    pub(crate) fn check<T: fmt::Display + PartialEq + ?Sized>(
        &mut self,
        case: impl fmt::Display,
        inputs: impl FnOnce() -> String,
        expected: &T,
        actual: &T,
    ) {
        self.cases += 1;
        if expected != actual {
            self.failures.push(Failure {
                case: case.to_string(),
                inputs: inputs(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    pub(crate) fn holds(&mut self, case: impl fmt::Display, inputs: impl FnOnce() -> String, ok: bool) {
        self.check(case, inputs, &true, &ok);
    }

    pub(crate) fn merge(&mut self, other: Recorder) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }
}
