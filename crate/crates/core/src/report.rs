//! Machine-readable verification reports, one JSON object per line.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// Field order is the serialized key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub case: String,
    pub n: usize,
    pub engine: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub millis: u64,
}

impl Report {
    /// Pass iff the two renderings agree and `extra_ok` holds.
    pub fn compare(
        case: impl Into<String>,
        n: usize,
        engine: impl Into<String>,
        lhs: String,
        rhs: String,
        extra_ok: bool,
        millis: u64,
    ) -> Report {
        let status = if extra_ok && lhs == rhs {
            Status::Pass
        } else {
            Status::Fail
        };
        Report {
            case: case.into(),
            n,
            engine: engine.into(),
            status,
            lhs,
            rhs,
            millis,
        }
    }

    pub fn error(case: impl Into<String>, n: usize, engine: impl Into<String>, msg: String, millis: u64) -> Report {
        Report {
            case: case.into(),
            n,
            engine: engine.into(),
            status: Status::Error,
            lhs: msg,
            rhs: String::new(),
            millis,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Single-line JSON with keys in the fixed order
/// `case, n, engine, status, lhs, rhs, millis`.
pub fn report_emit(r: &Report) -> String {
    serde_json::to_string(r).expect("report serializes")
}

pub(crate) fn elapsed_millis(start: std::time::Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_order_and_shape() {
        let r = Report::compare("T1", 1, "bareiss", "1".into(), "1".into(), true, 0);
        assert_eq!(
            report_emit(&r),
            r#"{"case":"T1","n":1,"engine":"bareiss","status":"pass","lhs":"1","rhs":"1","millis":0}"#
        );
        let f = Report::compare("T1", 2, "bareiss", "x + 1".into(), "x".into(), true, 3);
        assert_eq!(f.status, Status::Fail);
        let back: Report = serde_json::from_str(&report_emit(&f)).unwrap();
        assert_eq!(back, f);
    }
}
