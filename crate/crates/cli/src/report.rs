use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A semidecision outcome that supports but does not prove a claim.
    Evidence,
    BudgetExceeded,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Evidence => "evidence",
            Status::BudgetExceeded => "budget-exceeded",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    /// The mathematical result the check exercises.
    pub tag: String,
    pub status: Status,
    pub summary: String,
    pub data: Value,
}

impl Check {
    pub fn new(id: impl Into<String>, tag: &str, status: Status, summary: impl Into<String>, data: Value) -> Check {
        Check {
            id: id.into(),
            tag: tag.to_string(),
            status,
            summary: summary.into(),
            data,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub version: String,
    pub command: Vec<String>,
    pub checks: Vec<Check>,
}

impl Report {
    /// Checks are ordered by id.
    pub fn new(command: Vec<String>, mut checks: Vec<Check>) -> Report {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        Report {
            schema: SCHEMA,
            version: env!("CARGO_PKG_VERSION").to_string(),
            command,
            checks,
        }
    }

    /// 0 all pass, 1 any failure, 2 otherwise (evidence or budget outcomes).
    pub fn exit_code(&self) -> u8 {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else if self.checks.iter().all(|c| c.status == Status::Pass) {
            0
        } else {
            2
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    pub fn to_table(&self) -> String {
        let w = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{:<16} {:<w$}  {}", c.status.as_str(), c.id, c.summary);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        Report::new(
            vec!["hopfad".into(), "fc".into(), "dinf".into()],
            vec![
                Check::new("b", "fc-center", Status::Evidence, "grew", json!({"dims": [1, 2, 3]})),
                Check::new("a", "axioms", Status::Pass, "ok", json!(null)),
            ],
        )
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let r = sample();
        let s = r.to_json();
        let back = Report::from_json(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), s);
        assert!(s.contains("\"schema\": 1"));
        assert_eq!(serde_json::to_string(&Status::BudgetExceeded).unwrap(), "\"budget-exceeded\"");
    }

    #[test]
    fn checks_are_sorted_and_exit_codes_follow_statuses() {
        let r = sample();
        assert_eq!(r.checks[0].id, "a");
        assert_eq!(r.exit_code(), 2);
        let mut f = r.clone();
        f.checks[0].status = Status::Fail;
        assert_eq!(f.exit_code(), 1);
        let mut p = r;
        p.checks[1].status = Status::Pass;
        assert_eq!(p.exit_code(), 0);
    }
}
