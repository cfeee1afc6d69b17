use std::time::Duration;

use serde::{Serialize, Serializer};

use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// First exponent at which the two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub exponent: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking one identity.
///
/// Serialises as `{id, status, order, first_mismatch?, error?, ms}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub status: Status,
    #[serde(rename = "order")]
    pub order_checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(rename = "ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl VerificationReport {
    /// Compares two evaluated sides coefficient by coefficient.
    pub fn compare(
        id: impl Into<String>,
        lhs: &TruncatedSeries,
        rhs: &TruncatedSeries,
        elapsed: Duration,
    ) -> Self {
        let id = id.into();
        let order = lhs.order().min(rhs.order());
        match lhs.first_difference(rhs) {
            Ok(None) => VerificationReport {
                id,
                status: Status::Pass,
                order_checked: order,
                first_mismatch: None,
                error: None,
                elapsed,
            },
            Ok(Some(e)) => VerificationReport {
                id,
                status: Status::Fail,
                order_checked: order,
                first_mismatch: Some(Mismatch {
                    exponent: e,
                    lhs: lhs.coeff(e).to_string(),
                    rhs: rhs.coeff(e).to_string(),
                }),
                error: None,
                elapsed,
            },
            Err(err) => Self::error(id, order, err.to_string(), elapsed),
        }
    }

    pub fn error(id: impl Into<String>, order: usize, message: String, elapsed: Duration) -> Self {
        VerificationReport {
            id: id.into(),
            status: Status::Error,
            order_checked: order,
            first_mismatch: None,
            error: Some(message),
            elapsed,
        }
    }

    pub(crate) fn from_result(
        id: &str,
        order: usize,
        sides: Result<(TruncatedSeries, TruncatedSeries), String>,
        elapsed: Duration,
    ) -> Self {
        match sides {
            Ok((l, r)) => Self::compare(id, &l, &r, elapsed),
            Err(msg) => Self::error(id, order, msg, elapsed),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The same report with the timing field zeroed, for reproducibility checks.
    pub fn without_timing(&self) -> Self {
        VerificationReport {
            elapsed: Duration::ZERO,
            ..self.clone()
        }
    }
}
