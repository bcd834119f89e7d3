//! Verification reports shared by the identity catalog and the theorem suite.

use std::time::Duration;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one bounded verification run.
///
/// A failure always carries the smallest offending exponent, in the
/// coordinates of the series the claim was stated about, so it can be
/// re-checked with a single coefficient query. `order` records how far the
/// check ran; a pass is a statement about exponents up to that order only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub order: usize,
    pub status: Status,
    pub first_failure: Option<usize>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(id: impl Into<String>, order: usize, first_failure: Option<usize>) -> Self {
        VerificationReport {
            id: id.into(),
            order,
            status: if first_failure.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            first_failure,
            elapsed_ms: 0,
        }
    }

    pub fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.elapsed_ms = elapsed.as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Fold constituent check outcomes into one report under a new id,
    /// keeping the smallest counterexample.
    pub fn combine(
        id: impl Into<String>,
        order: usize,
        parts: impl IntoIterator<Item = VerificationReport>,
    ) -> Self {
        let first_failure = parts
            .into_iter()
            .filter_map(|r| r.first_failure)
            .min();
        VerificationReport::new(id, order, first_failure)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape_is_stable() {
        let report = VerificationReport::new("T-c8", 4900, None);
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            r#"{"id":"T-c8","order":4900,"status":"pass","first_failure":null,"elapsed_ms":0}"#
        );
    }

    #[test]
    fn combine_keeps_smallest_counterexample() {
        let a = VerificationReport::new("a", 100, Some(17));
        let b = VerificationReport::new("b", 100, Some(5));
        let c = VerificationReport::new("c", 100, None);
        let all = VerificationReport::combine("t", 100, [a, b, c]);
        assert_eq!(all.status, Status::Fail);
        assert_eq!(all.first_failure, Some(5));
    }
}
