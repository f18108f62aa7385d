//! Machine-readable certificates.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

/// A command's inputs, results and checks. Field order is fixed and there
/// are no timestamps, so identical invocations serialize identically.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub command: Vec<String>,
    pub inputs: Value,
    /// SHA-256 of the compact JSON of `inputs` (object keys sorted).
    pub inputs_digest: String,
    pub results: Value,
    pub checks: Vec<Check>,
    pub ok: bool,
    pub tool_version: String,
    pub seed: u64,
}

pub fn digest(inputs: &Value) -> String {
    let bytes = serde_json::to_vec(inputs).expect("JSON values serialize");
    let hash = Sha256::digest(&bytes);
    hash.iter().map(|b| format!("{b:02x}")).collect()
}

impl Certificate {
    pub fn new(command: Vec<String>, inputs: Value, results: Value, checks: Vec<Check>, seed: u64) -> Self {
        let ok = checks.iter().all(|c| c.passed);
        Certificate {
            command,
            inputs_digest: digest(&inputs),
            inputs,
            results,
            checks,
            ok,
            tool_version: TOOL_VERSION.to_string(),
            seed,
        }
    }

    /// A certificate for a command that stopped with an error.
    pub fn failure(command: Vec<String>, inputs: Value, stage: &str, error: &str, seed: u64) -> Self {
        Self::new(
            command,
            inputs,
            serde_json::json!({ "error": error }),
            vec![Check::new(stage, false, error)],
            seed,
        )
    }

    /// Recomputes the digest and the `ok` flag.
    pub fn is_consistent(&self) -> bool {
        self.inputs_digest == digest(&self.inputs) && self.ok == self.checks.iter().all(|c| c.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn summary(&self) -> String {
        let mut out = format!("{} [{}]\n", self.command.join(" "), if self.ok { "ok" } else { "FAILED" });
        for c in &self.checks {
            out.push_str(&format!("  {} {}: {}\n", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail));
        }
        out
    }
}
