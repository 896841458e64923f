use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

/// One failing case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    pub fn new(input: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        Failure { input: input.into(), expected: expected.to_string(), actual: actual.to_string() }
    }
}

/// Outcome of a suite. Failures are listed in enumeration order, so the
/// first one is the smallest counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases_total: usize,
    pub cases_failed: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.cases_failed == 0
    }

    /// Concatenates two reports for the same suite.
    pub fn merge(mut self, other: VerifyReport) -> VerifyReport {
        self.cases_total += other.cases_total;
        self.cases_failed += other.cases_failed;
        self.failures.extend(other.failures);
        self.elapsed_ms += other.elapsed_ms;
        self
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}/{} passed in {} ms",
            self.suite,
            self.cases_total - self.cases_failed,
            self.cases_total,
            self.elapsed_ms
        )?;
        for fail in &self.failures {
            write!(f, "\n  {}: expected {}, got {}", fail.input, fail.expected, fail.actual)?;
        }
        Ok(())
    }
}

/// Runs `check` on every case, optionally in parallel, keeping the order.
pub(crate) fn run_cases<T, F>(cases: &[T], parallel: bool, check: F) -> (usize, Vec<Failure>)
where
    T: Sync,
    F: Fn(&T) -> Option<Failure> + Sync,
{
    let results: Vec<Option<Failure>> = if parallel {
        cases.par_iter().map(&check).collect()
    } else {
        cases.iter().map(&check).collect()
    };
    (cases.len(), results.into_iter().flatten().collect())
}
