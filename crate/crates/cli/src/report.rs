use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// The stdout report. `params` and `counts` are `serde_json` maps, which
/// keep their keys sorted, so equal runs serialize to equal bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub pass: bool,
    pub counterexample: Option<Value>,
    pub counts: Map<String, Value>,
    pub elapsed_ms: u64,
    pub version: String,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            params: Map::new(),
            pass: true,
            counterexample: None,
            counts: Map::new(),
            elapsed_ms: 0,
            version: VERSION.to_string(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn count(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.counts.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let status = if self.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{}: {status}", self.command);
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={}", plain(v)))
            .collect();
        if !params.is_empty() {
            let _ = writeln!(s, "  params: {}", params.join(" "));
        }
        for (k, v) in &self.counts {
            let _ = writeln!(s, "  {k}: {}", plain(v));
        }
        if let Some(Value::Object(cx)) = &self.counterexample {
            let _ = writeln!(s, "  counterexample:");
            for (k, v) in cx {
                let _ = writeln!(s, "    {k}: {}", plain(v));
            }
        }
        let _ = writeln!(s, "  elapsed: {} ms", self.elapsed_ms);
        s
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
