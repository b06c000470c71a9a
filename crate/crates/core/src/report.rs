use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Pass/fail outcome of one identity or property check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: Value,
    pub pass: bool,
    pub counterexample: Option<Value>,
}

impl VerificationReport {
    pub fn passed(identity: impl Into<String>, params: Value) -> Self {
        VerificationReport {
            identity: identity.into(),
            params,
            pass: true,
            counterexample: None,
        }
    }

    pub fn failed(identity: impl Into<String>, params: Value, counterexample: Value) -> Self {
        VerificationReport {
            identity: identity.into(),
            params,
            pass: false,
            counterexample: Some(counterexample),
        }
    }

    pub fn from_check(identity: impl Into<String>, params: Value, failure: Option<Value>) -> Self {
        match failure {
            None => Self::passed(identity, params),
            Some(c) => Self::failed(identity, params, c),
        }
    }

    /// Folds many reports into one that passes iff all of them pass; the
    /// first failing report becomes the counterexample.
    pub fn summarize(
        identity: impl Into<String>,
        params: Value,
        reports: &[VerificationReport],
    ) -> Self {
        match reports.iter().find(|r| !r.pass) {
            None => Self::passed(identity, params),
            Some(bad) => Self::failed(
                identity,
                params,
                serde_json::to_value(bad).expect("report is serializable"),
            ),
        }
    }
}
