//! Human and structured (JSON, schema v1) output rendering.

use std::collections::BTreeMap;

use classprod::theorems::TheoremReport;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Json,
}

/// Envelope for structured output. Additive schema evolution only.
#[derive(Serialize)]
pub struct OutputRecord {
    pub schema_version: u32,
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub payload: serde_json::Value,
}

impl OutputRecord {
    pub fn new(command: &str, params: BTreeMap<String, String>, payload: serde_json::Value) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            params,
            payload,
        }
    }
}

/// One line per claim: id, params, computed values, PASS/FAIL, and a
/// TIGHT marker when the bound is met with equality. Witnesses follow
/// on indented lines when the claim fails.
pub fn human_report(report: &TheoremReport) -> String {
    let mut line = report.claim_id.clone();
    for (k, v) in &report.params {
        line.push_str(&format!(" {k}={v}"));
    }
    for (k, v) in &report.computed {
        line.push_str(&format!(" {k}={v}"));
    }
    line.push_str(if report.passed() { " PASS" } else { " FAIL" });
    if report.tight == Some(true) {
        line.push_str(" TIGHT");
    }
    if !report.passed() {
        for w in &report.witnesses {
            line.push_str(&format!("\n  witness: {w}"));
        }
    }
    line
}

pub fn render_reports(
    format: Format,
    command: &str,
    params: BTreeMap<String, String>,
    reports: &[TheoremReport],
) -> String {
    match format {
        Format::Human => reports
            .iter()
            .map(human_report)
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => {
            let record = OutputRecord::new(
                command,
                params,
                serde_json::json!({ "reports": reports }),
            );
            serde_json::to_string_pretty(&record).expect("reports serialize")
        }
    }
}
