//! Machine-readable suite reports: JSON, CSV and human renderings.
//!
//! Reports are byte-deterministic for fixed inputs and flags: checks are
//! emitted in the order they were produced (suites generate them in a fixed
//! order), numbers in exact suites are exact rational strings, and wall
//! times are confined to the human rendering.

use psilab_seq::{ResidualReport, ResidualValue};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CheckSummary {
    pub identity: String,
    pub index: i64,
    pub residual: String,
    pub exact: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SequenceDump {
    pub name: String,
    pub start: i64,
    pub step: i64,
    pub values: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncated_at: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub curve: String,
    pub pass: bool,
    pub params: Vec<(String, String)>,
    pub checks: Vec<CheckSummary>,
    pub sequences: Vec<SequenceDump>,
    /// Wall time; excluded from json/csv so those stay byte-deterministic.
    #[serde(skip)]
    pub timing_ms: u128,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, curve: impl Into<String>) -> Self {
        SuiteReport {
            suite: suite.into(),
            curve: curve.into(),
            pass: true,
            params: Vec::new(),
            checks: Vec::new(),
            sequences: Vec::new(),
            timing_ms: 0,
        }
    }

    pub fn param(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.params.push((key.into(), value.into()));
    }

    /// Folds a residual report in, one check row per index.
    pub fn absorb(&mut self, report: &ResidualReport, tol: Option<f64>) {
        for (idx, value) in &report.residuals {
            let pass = match value {
                ResidualValue::ExactZero => true,
                ResidualValue::ExactNonzero(_) => false,
                ResidualValue::Norm(v) => tol.map_or(false, |t| *v < t),
            };
            self.push_check(CheckSummary {
                identity: report.identity.clone(),
                index: *idx,
                residual: value.render(),
                exact: matches!(value, ResidualValue::ExactZero),
                pass,
            });
        }
    }

    pub fn push_check(&mut self, check: CheckSummary) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    /// A named boolean fact rendered as a 0/1 residual.
    pub fn push_fact(&mut self, identity: impl Into<String>, index: i64, holds: bool) {
        self.push_check(CheckSummary {
            identity: identity.into(),
            index,
            residual: if holds { "0".into() } else { "1".into() },
            exact: holds,
            pass: holds,
        });
    }

    pub fn push_sequence(&mut self, dump: SequenceDump) {
        self.sequences.push(dump);
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.pass &= other.pass;
        let curve = other.curve.clone();
        for mut check in other.checks {
            check.identity = format!("{}@{}", check.identity, curve);
            self.checks.push(check);
        }
        for mut seq in other.sequences {
            seq.name = format!("{}@{}", seq.name, curve);
            self.sequences.push(seq);
        }
        for (k, v) in other.params {
            self.params.push((format!("{}@{}", k, curve), v));
        }
        self.timing_ms += other.timing_ms;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Human,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "human" => Ok(Format::Human),
            other => Err(format!("unknown format `{}`", other)),
        }
    }
}

pub fn emit_report(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("suite,identity,index,residual,exact_flag\n");
            for c in &report.checks {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    report.suite,
                    c.identity,
                    c.index,
                    csv_quote(&c.residual),
                    c.exact
                ));
            }
            for s in &report.sequences {
                for (k, v) in s.values.iter().enumerate() {
                    out.push_str(&format!(
                        "{},seq:{},{},{},{}\n",
                        report.suite,
                        s.name,
                        s.start + s.step * k as i64,
                        csv_quote(v),
                        true
                    ));
                }
            }
            out
        }
        Format::Human => {
            let mut out = String::new();
            out.push_str(&format!(
                "suite {} on {}: {}\n",
                report.suite,
                report.curve,
                if report.pass { "PASS" } else { "FAIL" }
            ));
            for (k, v) in &report.params {
                out.push_str(&format!("  {} = {}\n", k, v));
            }
            for c in &report.checks {
                out.push_str(&format!(
                    "  [{}] {} (index {}): residual {}\n",
                    if c.pass { "ok" } else { "FAIL" },
                    c.identity,
                    c.index,
                    c.residual
                ));
            }
            for s in &report.sequences {
                let vals: Vec<String> = s
                    .values
                    .iter()
                    .enumerate()
                    .map(|(k, v)| format!("{}:{}", s.start + s.step * k as i64, v))
                    .collect();
                out.push_str(&format!("  sequence {}: {}\n", s.name, vals.join(" ")));
                if let Some(t) = s.truncated_at {
                    out.push_str(&format!("    (truncated at index {})\n", t));
                }
            }
            out.push_str(&format!("  elapsed: {} ms\n", report.timing_ms));
            out
        }
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
