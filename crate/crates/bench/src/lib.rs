//! Inputs shared by the benchmark targets.

use qdissect_core::verify::{find, IdentityRecord};

/// Eta quotients of increasing weight, as qlang source.
pub const QUOTIENTS: &[&str] = &["f2/f1^2", "64*f2^22/f1^23", "f2^122/(f1^63*f4^40)"];

/// Catalog records exercised by the verification bench.
pub fn sample_records() -> Vec<&'static IdentityRecord> {
    ["M-2", "L2.1-a", "3-9", "3-16", "R-1"]
        .iter()
        .map(|id| find(id).expect("record present"))
        .collect()
}
