//! Report envelope, rendering and exit status.
//!
//! Every command produces an [`Outcome`]. In JSON mode it is printed as
//!
//! ```text
//! {"command": "...", "passed": bool, "failures": [...], "result": {...}}
//! ```
//!
//! and an error as `{"command": "...", "passed": false, "error": {"kind", "message"}}`.
//! Exit status is 0 when every check passes, 1 when a check fails and 2 on
//! invalid input.

use std::fmt;
use std::io::Write;
use std::path::Path;

use radmap::suites::Check;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cli::Format;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Core(radmap::Error),
    Input(String),
    Io(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Input(_) => "input",
            CliError::Io(_) => "io",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<radmap::Error> for CliError {
    fn from(e: radmap::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// A failed check in the envelope's `failures` list.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub check: String,
    pub value: f64,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Failure {
    pub fn from_check(prefix: &str, c: &Check) -> Self {
        let check = if prefix.is_empty() { c.name.clone() } else { format!("{prefix}: {}", c.name) };
        Failure { check, value: c.value, tolerance: c.tolerance, detail: c.detail.clone() }
    }

    pub fn message(check: impl Into<String>, detail: impl Into<String>) -> Self {
        Failure { check: check.into(), value: f64::NAN, tolerance: 0.0, detail: Some(detail.into()) }
    }
}

pub struct Outcome {
    pub command: String,
    pub failures: Vec<Failure>,
    pub result: Value,
    pub csv: String,
    pub text: String,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn envelope(&self) -> Value {
        json!({
            "command": self.command,
            "passed": self.passed(),
            "failures": self.failures,
            "result": self.result,
        })
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }
}

pub fn error_envelope(command: &str, err: &CliError) -> Value {
    json!({
        "command": command,
        "passed": false,
        "error": {"kind": err.kind(), "message": err.to_string()},
    })
}

/// Serializes non-finite floats as null rather than failing.
pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

pub fn render(outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Json => pretty(&outcome.envelope()),
        Format::Csv => outcome.csv.clone(),
        Format::Text => {
            let mut s = outcome.text.clone();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            for f in &outcome.failures {
                s.push_str(&format!("FAILED {}: {:e} (tolerance {:e})", f.check, f.value, f.tolerance));
                if let Some(d) = &f.detail {
                    s.push_str(&format!(" {d}"));
                }
                s.push('\n');
            }
            s
        }
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap_or_else(|_| "null".into());
    s.push('\n');
    s
}

pub fn emit(body: &str, path: Option<&Path>) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, body).map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes()).and_then(|_| out.flush()).map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

/// `value` formatted for CSV: shortest round-trip representation.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}
