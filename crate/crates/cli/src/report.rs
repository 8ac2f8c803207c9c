//! Check reports: fixed-order PASS/FAIL lines or machine-readable records.
//! Output is deterministic for fixed inputs and seeds; timings are printed
//! only on request.

use std::time::Duration;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::Skipped => "SKIPPED",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub computed: String,
    pub elapsed: Duration,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status) -> Self {
        Check {
            name: name.into(),
            status,
            expected: String::new(),
            computed: String::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn values(mut self, expected: impl ToString, computed: impl ToString) -> Self {
        self.expected = expected.to_string();
        self.computed = computed.to_string();
        self
    }

    pub fn timed(mut self, elapsed: Duration) -> Self {
        self.elapsed = elapsed;
        self
    }
}

pub fn check_eq<T: PartialEq + std::fmt::Debug>(
    name: impl Into<String>,
    expected: T,
    computed: T,
) -> Check {
    let status = if expected == computed {
        Status::Pass
    } else {
        Status::Fail
    };
    Check::new(name, status).values(format!("{expected:?}"), format!("{computed:?}"))
}

pub fn check_that(name: impl Into<String>, ok: bool) -> Check {
    Check::new(name, if ok { Status::Pass } else { Status::Fail }).values("true", ok)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Records,
}

#[derive(Debug, Default)]
pub struct Report {
    pub command: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: Vec<Check>) {
        self.checks.extend(checks);
    }

    pub fn print(&self, format: Format, timings: bool) {
        match format {
            Format::Text => {
                println!("# {}", self.command);
                for c in &self.checks {
                    let mut line = format!("{:<12} {}", c.status.label(), c.name);
                    if !c.expected.is_empty() || !c.computed.is_empty() {
                        line.push_str(&format!(
                            "  expected={} computed={}",
                            c.expected, c.computed
                        ));
                    }
                    if timings {
                        line.push_str(&format!("  [{:?}]", c.elapsed));
                    }
                    println!("{line}");
                }
                let failed = self
                    .checks
                    .iter()
                    .filter(|c| c.status == Status::Fail)
                    .count();
                println!("# {} checks, {} failed", self.checks.len(), failed);
            }
            Format::Records => {
                println!("{}", serde_json::json!({ "command": self.command }));
                for c in &self.checks {
                    let mut record = serde_json::json!({
                        "check": c.name,
                        "status": c.status.label(),
                        "expected": c.expected,
                        "computed": c.computed,
                    });
                    if timings {
                        record["millis"] = serde_json::json!(c.elapsed.as_millis() as u64);
                    }
                    println!("{record}");
                }
            }
        }
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else {
            0
        }
    }
}
