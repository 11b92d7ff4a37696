//! Machine-readable run reports shared by the command line tool and tests.
//!
//! Every number is written as a decimal string so that arbitrarily large
//! integers survive a JSON round trip unchanged.

use std::collections::BTreeMap;
use std::fmt::Display;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::polyseries::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResultValue {
    Poly(IntPolynomial),
    Int(BigInt),
    Bool(bool),
}

impl ResultValue {
    pub fn kind(&self) -> &'static str {
        match self {
            ResultValue::Poly(_) => "poly",
            ResultValue::Int(_) => "int",
            ResultValue::Bool(_) => "bool",
        }
    }
}

impl Display for ResultValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ResultValue::Poly(p) => write!(f, "{p}"),
            ResultValue::Int(n) => write!(f, "{n}"),
            ResultValue::Bool(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawResult", into = "RawResult")]
pub struct NamedResult {
    pub name: String,
    pub value: ResultValue,
}

#[derive(Serialize, Deserialize)]
struct RawResult {
    name: String,
    kind: String,
    value: Value,
}

impl From<NamedResult> for RawResult {
    fn from(r: NamedResult) -> Self {
        let kind = r.value.kind().to_string();
        let value = match r.value {
            ResultValue::Poly(p) => serde_json::to_value(p).expect("polynomials serialize"),
            ResultValue::Int(n) => Value::String(n.to_string()),
            ResultValue::Bool(b) => Value::Bool(b),
        };
        RawResult {
            name: r.name,
            kind,
            value,
        }
    }
}

impl TryFrom<RawResult> for NamedResult {
    type Error = String;

    fn try_from(raw: RawResult) -> Result<Self, String> {
        let value = match (raw.kind.as_str(), raw.value) {
            ("poly", v) => ResultValue::Poly(serde_json::from_value(v).map_err(|e| e.to_string())?),
            ("int", Value::String(s)) => {
                ResultValue::Int(s.parse().map_err(|_| format!("bad integer {s:?}"))?)
            }
            ("bool", Value::Bool(b)) => ResultValue::Bool(b),
            (kind, v) => return Err(format!("value {v} does not fit kind {kind:?}")),
        };
        Ok(NamedResult {
            name: raw.name,
            value,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub check: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub results: Vec<NamedResult>,
    pub identity_checks: Vec<IdentityCheck>,
    pub status: Status,
    pub mismatches: Vec<Mismatch>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            params: BTreeMap::new(),
            results: Vec::new(),
            identity_checks: Vec::new(),
            status: Status::Pass,
            mismatches: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn result(&mut self, name: impl Into<String>, value: ResultValue) -> &mut Self {
        self.results.push(NamedResult {
            name: name.into(),
            value,
        });
        self
    }

    /// Records whether `expected == actual`; a failure also lands in
    /// `mismatches` and flips the status.
    pub fn check<T: PartialEq + Display>(
        &mut self,
        name: impl Into<String>,
        expected: &T,
        actual: &T,
    ) -> bool {
        let name = name.into();
        let holds = expected == actual;
        if !holds {
            self.fail(name.clone(), expected, actual);
        }
        self.identity_checks.push(IdentityCheck { name, holds });
        holds
    }

    pub fn fail(&mut self, check: impl Into<String>, expected: impl Display, actual: impl Display) {
        self.status = Status::Fail;
        self.mismatches.push(Mismatch {
            check: check.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_byte_identical() {
        let mut r = RunReport::new("series quot2");
        r.param("n", 2).param("r", 1);
        r.result(
            "poincare",
            ResultValue::Poly(IntPolynomial::from_i64s(&[1, 1])),
        );
        r.result("big", ResultValue::Int(BigInt::from(10).pow(40u32)));
        r.result("flag", ResultValue::Bool(true));
        r.check("one equals one", &1, &1);
        let json = r.to_json();
        let back = RunReport::from_json(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), json);
        assert!(json.contains(
            r#""value": [
        "1",
        "1"
      ]"#
        ));
    }

    #[test]
    fn failed_check_flips_status() {
        let mut r = RunReport::new("x");
        assert!(!r.check("c", &BigInt::from(3), &BigInt::from(4)));
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.mismatches[0].expected, "3");
        assert!(r.to_json().contains(r#""status": "fail""#));
    }

    #[test]
    fn rejects_kind_value_confusion() {
        let bad = r#"{"command":"x","params":{},"results":[{"name":"a","kind":"int","value":true}],
            "identity_checks":[],"status":"pass","mismatches":[]}"#;
        assert!(RunReport::from_json(bad).is_err());
    }
}
