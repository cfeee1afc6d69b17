use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::catalog::{catalog, IdentityRecord, Relation};
use super::report::{Status, VerificationReport};
use crate::qlang::{eval, Expr, ExprKind};
use crate::series::TruncatedSeries;

/// Order used when neither the caller nor the record asks for more.
pub const DEFAULT_ORDER: usize = 200;

/// How congruence records are evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Backend {
    /// Both sides computed in `Z/m` throughout.
    #[default]
    Residue,
    /// Both sides computed over `Z`, reduced at the end.
    Audit,
}

/// Checks one record through `q^order`.
///
/// With no override the order is `max(DEFAULT_ORDER, record.min_order)`. An
/// override below the record's minimum yields an error report.
pub fn verify(record: &IdentityRecord, order: Option<usize>, backend: Backend) -> VerificationReport {
    let start = Instant::now();
    let n = order.unwrap_or(DEFAULT_ORDER.max(record.min_order));
    if n < record.min_order {
        return VerificationReport::error(
            &record.id,
            n,
            format!("order {n} is below the record minimum {}", record.min_order),
            start.elapsed(),
        );
    }
    let sides = evaluate_sides(record, n, backend);
    VerificationReport::from_result(&record.id, n, sides, start.elapsed())
}

fn evaluate_sides(
    record: &IdentityRecord,
    n: usize,
    backend: Backend,
) -> Result<(TruncatedSeries, TruncatedSeries), String> {
    let side = |name: &str, e: &Expr, m: u64| {
        eval(e, n, m).map_err(|err| format!("{name}: {err}"))
    };
    match (record.relation, backend) {
        (Relation::Equality, _) => {
            let (l, r) = (side("lhs", &record.lhs, 0)?, side("rhs", &record.rhs, 0)?);
            if !l.is_exact() || !r.is_exact() {
                return Err("equality record evaluated to a residue series".into());
            }
            Ok((l, r))
        }
        (Relation::Congruence(m), Backend::Residue) => {
            let reduce = |s: TruncatedSeries| s.reduce_mod(m).map_err(|e| e.to_string());
            Ok((reduce(side("lhs", &record.lhs, m)?)?, reduce(side("rhs", &record.rhs, m)?)?))
        }
        (Relation::Congruence(m), Backend::Audit) => {
            let reduce = |s: TruncatedSeries| s.reduce_mod(m).map_err(|e| e.to_string());
            Ok((reduce(side("lhs", &record.lhs, 0)?)?, reduce(side("rhs", &record.rhs, 0)?)?))
        }
    }
}

/// Checks records independently; the output follows input order.
pub fn verify_records(
    records: &[IdentityRecord],
    order: Option<usize>,
    parallel: bool,
    backend: Backend,
) -> Vec<VerificationReport> {
    if parallel {
        records.par_iter().map(|r| verify(r, order, backend)).collect()
    } else {
        records.iter().map(|r| verify(r, order, backend)).collect()
    }
}

/// Checks the whole built-in catalog.
pub fn verify_all(order: Option<usize>, parallel: bool) -> Vec<VerificationReport> {
    verify_records(catalog(), order, parallel, Backend::Residue)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

pub fn summarize(reports: &[VerificationReport]) -> Summary {
    let mut s = Summary {
        total: reports.len(),
        ..Summary::default()
    };
    for r in reports {
        match r.status {
            Status::Pass => s.passed += 1,
            Status::Fail => s.failed += 1,
            Status::Error => s.errors += 1,
        }
    }
    s
}

/// A copy of `record` with `rhs + q^exponent` as its right-hand side.
pub fn perturb_rhs(record: &IdentityRecord, exponent: usize) -> IdentityRecord {
    let rhs = Expr::bare(ExprKind::Add(
        Box::new(record.rhs.clone()),
        Box::new(Expr::bare(ExprKind::QPower(exponent))),
    ));
    IdentityRecord {
        rhs,
        ..record.clone()
    }
}
