use qkborel::verify::{CheckResult, SuiteRun};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: &'static str,
    pub instances: usize,
    /// First failing term, if any.
    pub location: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct SuiteRecord {
    pub suite: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
    pub checks: Vec<CheckRecord>,
}

/// Ordered, deterministic unless wall times are requested.
#[derive(Debug, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub trunc: Option<u32>,
    pub mode: String,
    pub passed: bool,
    pub suites: Vec<SuiteRecord>,
}

impl CheckRecord {
    fn from_check(c: &CheckResult) -> Self {
        CheckRecord {
            id: c.name.clone(),
            status: if c.passed { "pass" } else { "fail" },
            instances: c.instances,
            location: (!c.passed).then(|| c.detail.clone()),
        }
    }
}

impl VerificationReport {
    pub fn new(n: usize, trunc: Option<u32>, mode: &str, runs: &[SuiteRun], timings: bool) -> Self {
        let suites: Vec<SuiteRecord> = runs
            .iter()
            .map(|r| SuiteRecord {
                suite: r.suite.name().to_string(),
                passed: r.checks.iter().all(|c| c.passed),
                wall_time_ms: timings.then_some(r.millis),
                checks: r.checks.iter().map(CheckRecord::from_check).collect(),
            })
            .collect();
        VerificationReport { n, trunc, mode: mode.to_string(), passed: suites.iter().all(|s| s.passed), suites }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let time = s.wall_time_ms.map(|t| format!(" ({t} ms)")).unwrap_or_default();
            out.push_str(&format!("[{}] {}{time}\n", s.suite, if s.passed { "PASS" } else { "FAIL" }));
            for c in &s.checks {
                out.push_str(&format!("  {} {}", c.status.to_uppercase(), c.id));
                if let Some(loc) = &c.location {
                    out.push_str(&format!(" -- {loc}"));
                }
                out.push('\n');
            }
        }
        out.push_str(&format!("overall: {}\n", if self.passed { "PASS" } else { "FAIL" }));
        out
    }
}
