//! Verification reports: one JSON document per command run, or the same
//! content as a plain-text table.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

use crossbial::structures::CheckReport;

use crate::workspace::canonical_json;

pub const REPORT_SCHEMA: &str = "crossbial-report/1";

#[derive(Clone, Debug, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub report: CheckReport,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub schema: &'static str,
    pub tool: Tool,
    pub command: Vec<String>,
    pub checks: Vec<NamedCheck>,
    pub result: Map<String, Value>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

/// What a command computed, before it is wrapped into a document.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub checks: Vec<NamedCheck>,
    pub result: Map<String, Value>,
    /// Extra conditions on top of the checks, such as "an order was found".
    pub conditions: Vec<bool>,
    pub error: Option<String>,
}

impl Outcome {
    pub fn check(&mut self, name: impl Into<String>, report: CheckReport) -> &mut Self {
        self.checks.push(NamedCheck {
            name: name.into(),
            report,
        });
        self
    }

    pub fn set(&mut self, key: &str, v: impl Serialize) -> &mut Self {
        let v = serde_json::to_value(v).expect("result values serialize");
        self.result.insert(key.into(), v);
        self
    }

    pub fn require(&mut self, cond: bool) -> &mut Self {
        self.conditions.push(cond);
        self
    }

    pub fn failed(message: String) -> Self {
        Outcome {
            error: Some(message),
            ..Default::default()
        }
    }

    pub fn verdict(&self) -> Verdict {
        let ok = self.error.is_none()
            && self.checks.iter().all(|c| c.report.passed())
            && self.conditions.iter().all(|&c| c);
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn into_document(self, command: Vec<String>, timing: Option<f64>) -> ReportDocument {
        ReportDocument {
            schema: REPORT_SCHEMA,
            tool: Tool {
                name: "crossbial",
                version: env!("CARGO_PKG_VERSION"),
            },
            command,
            verdict: self.verdict(),
            checks: self.checks,
            result: self.result,
            error: self.error,
            timing: timing.map(|seconds| Timing { seconds }),
        }
    }
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        canonical_json(&serde_json::to_value(self).expect("reports serialize"))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} {}: {}",
            self.tool.name,
            self.tool.version,
            self.command.join(" ")
        );
        for c in &self.checks {
            let _ = writeln!(out, "\n{}", c.name);
            for e in &c.report.entries {
                let mark = if e.passed { "PASS" } else { "FAIL" };
                let _ = write!(out, "  {mark}  {}", e.axiom);
                if let Some(w) = &e.counterexample {
                    let _ = write!(
                        out,
                        "  (basis {:?} -> {:?}: {} vs {})",
                        w.input, w.output, w.lhs, w.rhs
                    );
                }
                out.push('\n');
            }
        }
        if !self.result.is_empty() {
            out.push_str("\nresult\n");
            for (k, v) in &self.result {
                let _ = writeln!(out, "  {k}: {}", inline(v));
            }
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "\nerror: {e}");
        }
        let _ = writeln!(
            out,
            "\nverdict: {}",
            match self.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
            }
        );
        if let Some(t) = &self.timing {
            let _ = writeln!(out, "time: {:.3} s", t.seconds);
        }
        out
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
