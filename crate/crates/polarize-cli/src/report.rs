//! The machine-readable run report every subcommand emits on stdout.

use serde::Serialize;
use serde_json::Value;

use polarize::Check;

/// One line of the checks summary: name, verdict, and the margin
/// (`rhs − lhs`; nonnegative means satisfied with slack).
#[derive(Clone, Debug, Serialize)]
pub struct CheckSummary {
    pub name: String,
    pub passed: bool,
    pub margin: f64,
}

impl From<&Check> for CheckSummary {
    fn from(check: &Check) -> Self {
        CheckSummary {
            name: check.name.clone(),
            passed: check.passed,
            margin: check.margin,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub version: &'static str,
    pub command: String,
    /// Unix seconds; omitted under `--deterministic` so identical
    /// invocations produce byte-identical reports.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub inputs: Value,
    pub results: Value,
    pub checks: Vec<CheckSummary>,
    pub exit_status: i32,
}

impl RunReport {
    pub fn new(command: &str, deterministic: bool, inputs: Value) -> Self {
        let timestamp = if deterministic {
            None
        } else {
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .ok()
                .map(|d| d.as_secs())
        };
        RunReport {
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            timestamp,
            inputs,
            results: Value::Null,
            checks: Vec::new(),
            exit_status: 0,
        }
    }

    /// Finalize the exit status from the checks, print the JSON report
    /// to stdout, and return the process exit code.
    pub fn emit(mut self) -> u8 {
        let ok = self.checks.iter().all(|c| c.passed);
        self.exit_status = if ok { 0 } else { 1 };
        println!(
            "{}",
            serde_json::to_string(&self).expect("report serializes")
        );
        self.exit_status as u8
    }
}
