//! The identity catalog and the engine that checks it.

mod catalog;
mod engine;
mod report;

pub use catalog::{
    builtin_source, catalog, export_catalog, find, parse_catalog, CatalogError, Fidelity,
    IdentityRecord, Relation, MIN_ORDER_FLOOR,
};
pub use engine::{perturb_rhs, summarize, verify, verify_all, verify_records, Backend, Summary, DEFAULT_ORDER};
pub use report::{Mismatch, Status, VerificationReport};
