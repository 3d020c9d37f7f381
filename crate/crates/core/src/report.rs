//! JSON check reports shared by the verification harness and the CLI.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One verification check: a stable id, a human-readable statement of the
/// identity being verified, the parameters it ran at, and a witness (the
/// rendered offending matrix or value) on failure.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub identity: String,
    pub parameters: BTreeMap<String, i64>,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckReport {
    pub fn pass(check_id: &str, identity: &str) -> Self {
        CheckReport {
            check_id: check_id.to_string(),
            identity: identity.to_string(),
            parameters: BTreeMap::new(),
            status: CheckStatus::Pass,
            witness: None,
        }
    }

    pub fn fail(check_id: &str, identity: &str, witness: String) -> Self {
        CheckReport {
            check_id: check_id.to_string(),
            identity: identity.to_string(),
            parameters: BTreeMap::new(),
            status: CheckStatus::Fail,
            witness: Some(witness),
        }
    }

    pub fn with_param(mut self, name: &str, value: i64) -> Self {
        self.parameters.insert(name.to_string(), value);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Sort reports canonically: by check id, then parameters.
pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by(|a, b| {
        a.check_id
            .cmp(&b.check_id)
            .then_with(|| a.parameters.cmp(&b.parameters))
    });
}
