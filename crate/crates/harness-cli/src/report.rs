use std::fmt::Display;

const MAX_DETAILS: usize = 12;

/// One failed case, kept for the report tail.
#[derive(Debug, Clone)]
pub struct CaseOutcome {
    pub id: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one verification suite: counters plus the first few failing
/// cases. Exit status of the whole run is 0 iff every suite reports zero
/// failures.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub suite: String,
    pub checks_passed: u64,
    pub checks_failed: u64,
    pub details: Vec<CaseOutcome>,
}

impl RunReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checks_passed: 0,
            checks_failed: 0,
            details: Vec::new(),
        }
    }

    pub fn check<E: Display, A: Display>(&mut self, id: impl Display, expected: E, actual: A, ok: bool) {
        if ok {
            self.checks_passed += 1;
        } else {
            self.checks_failed += 1;
            if self.details.len() < MAX_DETAILS {
                self.details.push(CaseOutcome {
                    id: id.to_string(),
                    expected: expected.to_string(),
                    actual: actual.to_string(),
                });
            }
        }
    }

    pub fn assert_eq<T: PartialEq + Display>(&mut self, id: impl Display, expected: T, actual: T) {
        let ok = expected == actual;
        self.check(id, expected, actual, ok);
    }

    pub fn succeeded(&self) -> bool {
        self.checks_failed == 0
    }

    pub fn print(&self) {
        let status = if self.succeeded() { "pass" } else { "FAIL" };
        println!(
            "{:<24} {}  ({} passed, {} failed)",
            self.suite, status, self.checks_passed, self.checks_failed
        );
        for d in &self.details {
            println!("    {}: expected {}, got {}", d.id, d.expected, d.actual);
        }
        if self.checks_failed as usize > self.details.len() {
            println!(
                "    ... and {} more failing cases",
                self.checks_failed as usize - self.details.len()
            );
        }
    }
}
