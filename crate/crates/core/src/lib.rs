//! Truncated q-series arithmetic, eta quotients and theta functions, with a
//! checker for dissection identities and overpartition congruences.
//!
//! ```
//! use qdissect_core::qlang::expand;
//!
//! let s = expand("dissect(f2/f1^2, 8, 7)", 3, 0).unwrap();
//! assert_eq!(s.to_i64_vec().unwrap(), vec![64, 1472, 17728, 150144]);
//! ```

pub mod error;
pub mod overpartitions;
pub mod pk;
pub mod qlang;
pub mod series;
pub mod special;
pub mod verify;

pub use error::SeriesError;
pub use overpartitions::{
    overpartition_gf, overpartition_oracle, overpartition_oracle_mod, scan_congruence,
    CongruenceClaim, ScanMode, Violation,
};
pub use qlang::{eval, parse, Expr, ExprKind, SourceSpan};
pub use series::{Monomial, TruncatedSeries};
pub use special::{eta_f, eta_quotient, theta_f, EtaQuotient};
pub use verify::{catalog, verify, verify_all, IdentityRecord, Relation, Status, VerificationReport};
