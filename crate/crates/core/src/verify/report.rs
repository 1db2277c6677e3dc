use serde::Serialize;

/// Outcome of one named identity check.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    /// Number of individual instances compared.
    pub instances: usize,
    pub detail: String,
}

impl CheckResult {
    pub fn pass(suite: &str, name: impl Into<String>, instances: usize) -> Self {
        CheckResult { suite: suite.into(), name: name.into(), passed: true, instances, detail: String::new() }
    }

    pub fn fail(suite: &str, name: impl Into<String>, instances: usize, detail: impl Into<String>) -> Self {
        CheckResult { suite: suite.into(), name: name.into(), passed: false, instances, detail: detail.into() }
    }

    /// Pass when `failures` is empty; otherwise reports the first failure.
    pub fn from_failures(suite: &str, name: impl Into<String>, instances: usize, failures: &[String]) -> Self {
        match failures.first() {
            None => Self::pass(suite, name, instances),
            Some(first) => {
                let more = if failures.len() > 1 { format!(" (+{} more)", failures.len() - 1) } else { String::new() };
                Self::fail(suite, name, instances, format!("{first}{more}"))
            }
        }
    }
}
