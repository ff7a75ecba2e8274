use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::poly::DistributionPoly;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::stats::PosSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One side of a failed comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum StatValue {
    Bool(bool),
    Int(usize),
    Set(PosSet),
    Perm(Permutation),
    Poly(DistributionPoly),
    Text(String),
}

/// Dispatches on the JSON shape; maps with an `images` key are permutations.
impl<'de> Deserialize<'de> for StatValue {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let value = Value::deserialize(deserializer)?;
        let parsed = match &value {
            Value::Bool(b) => Ok(StatValue::Bool(*b)),
            Value::Number(_) => serde_json::from_value(value).map(StatValue::Int),
            Value::Array(_) => serde_json::from_value(value).map(StatValue::Set),
            Value::Object(map) if map.contains_key("images") => serde_json::from_value(value).map(StatValue::Perm),
            Value::Object(_) => serde_json::from_value(value).map(StatValue::Poly),
            Value::String(s) => Ok(StatValue::Text(s.clone())),
            Value::Null => return Err(D::Error::custom("null statistic value")),
        };
        parsed.map_err(D::Error::custom)
    }
}

impl From<bool> for StatValue {
    fn from(b: bool) -> Self {
        StatValue::Bool(b)
    }
}

impl From<usize> for StatValue {
    fn from(x: usize) -> Self {
        StatValue::Int(x)
    }
}

impl From<String> for StatValue {
    fn from(s: String) -> Self {
        StatValue::Text(s)
    }
}

impl From<PosSet> for StatValue {
    fn from(s: PosSet) -> Self {
        StatValue::Set(s)
    }
}

impl From<Permutation> for StatValue {
    fn from(p: Permutation) -> Self {
        StatValue::Perm(p)
    }
}

impl From<DistributionPoly> for StatValue {
    fn from(p: DistributionPoly) -> Self {
        StatValue::Poly(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// The offending element, when the failure is local to one element.
    pub permutation: Option<Permutation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    pub detail: String,
    pub left: StatValue,
    pub right: StatValue,
}

impl Counterexample {
    pub fn new(detail: impl Into<String>, left: impl Into<StatValue>, right: impl Into<StatValue>) -> Self {
        Counterexample {
            permutation: None,
            q: None,
            detail: detail.into(),
            left: left.into(),
            right: right.into(),
        }
    }

    pub fn at(mut self, w: &Permutation) -> Self {
        self.permutation = Some(w.clone());
        self
    }

    pub fn with_q(mut self, q: usize) -> Self {
        self.q = Some(q);
        self
    }

    /// Records an error raised while evaluating a check.
    pub fn from_error(e: &Error) -> Self {
        Counterexample::new("evaluation error", StatValue::Text(e.to_string()), StatValue::Text(String::new()))
    }
}

/// `None` when `left == right`, otherwise a counterexample naming `detail`.
pub fn expect_eq<T>(detail: &str, left: T, right: T) -> Option<Counterexample>
where
    T: PartialEq + Into<StatValue>,
{
    if left == right {
        None
    } else {
        Some(Counterexample::new(detail, left, right))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub params: Value,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub population: u64,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The report with its timing zeroed, for comparing runs.
    pub fn untimed(&self) -> VerifyReport {
        VerifyReport { elapsed_ms: 0, ..self.clone() }
    }

    /// Single human-readable line.
    pub fn summary(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let mut line = format!(
            "[{status}] {} {} population={} elapsed_ms={}",
            self.theorem, self.params, self.population, self.elapsed_ms
        );
        if let Some(c) = &self.counterexample {
            let at = c.permutation.as_ref().map(|p| format!(" at {p}")).unwrap_or_default();
            let q = c.q.map(|q| format!(" (q={q})")).unwrap_or_default();
            line.push_str(&format!(
                "\n  counterexample{at}{q}: {}: {} vs {}",
                c.detail,
                serde_json::to_string(&c.left).unwrap_or_default(),
                serde_json::to_string(&c.right).unwrap_or_default()
            ));
        }
        line
    }
}

/// Accumulates a report while a check runs.
pub(crate) struct ReportBuilder {
    theorem: String,
    params: Value,
    started: Instant,
    pub population: u64,
    pub counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
}

impl ReportBuilder {
    pub fn new(theorem: impl Into<String>, params: Value) -> Self {
        ReportBuilder {
            theorem: theorem.into(),
            params,
            started: Instant::now(),
            population: 0,
            counterexample: None,
            notes: Vec::new(),
        }
    }

    /// Keeps the first failure only.
    pub fn fail(&mut self, c: Counterexample) {
        if self.counterexample.is_none() {
            self.counterexample = Some(c);
        }
    }

    pub fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn finish(self) -> VerifyReport {
        VerifyReport {
            theorem: self.theorem,
            params: self.params,
            status: if self.counterexample.is_some() { Status::Fail } else { Status::Pass },
            counterexample: self.counterexample,
            population: self.population,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            notes: self.notes,
        }
    }
}

pub(crate) fn run_report(
    theorem: impl Into<String>,
    params: Value,
    body: impl FnOnce(&mut ReportBuilder) -> Result<()>,
) -> Result<VerifyReport> {
    let mut builder = ReportBuilder::new(theorem, params);
    body(&mut builder)?;
    Ok(builder.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn stat_values_round_trip_untagged() {
        let values = vec![
            StatValue::Bool(true),
            StatValue::Int(11),
            StatValue::Set([1, 2, 4].into()),
            StatValue::Perm("4 6 7 3 2 1 5".parse().unwrap()),
            StatValue::Poly([0, 1, 1].into_iter().collect()),
            StatValue::Text("odd".into()),
        ];
        for v in values {
            let json = serde_json::to_string(&v).unwrap();
            assert_eq!(serde_json::from_str::<StatValue>(&json).unwrap(), v, "{json}");
        }
    }

    #[test]
    fn report_schema() {
        let report = run_report("psi", json!({"n": 3}), |b| {
            b.population = 12;
            b.fail(Counterexample::new("rmaj vs length", 3usize, 4usize).at(&"2 3 1 4".parse().unwrap()));
            b.fail(Counterexample::new("ignored", 0usize, 1usize));
            Ok(())
        })
        .unwrap();
        assert!(!report.passed());
        let value = serde_json::to_value(&report).unwrap();
        for key in ["theorem", "params", "status", "counterexample", "population", "elapsed_ms"] {
            assert!(value.get(key).is_some(), "{key}");
        }
        assert_eq!(value["status"], "fail");
        assert_eq!(value["counterexample"]["detail"], "rmaj vs length");
        assert_eq!(value["counterexample"]["left"], 3);
        let back: VerifyReport = serde_json::from_value(value).unwrap();
        assert_eq!(back, report);
        assert!(report.summary().starts_with("[FAIL] psi"));
    }

    #[test]
    fn expect_eq_reports_both_sides() {
        assert!(expect_eq("x", 1usize, 1usize).is_none());
        let c = expect_eq("x", 1usize, 2usize).unwrap();
        assert_eq!((c.left, c.right), (StatValue::Int(1), StatValue::Int(2)));
    }
}
