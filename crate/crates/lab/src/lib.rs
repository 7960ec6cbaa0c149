//! Exhaustive experiments on equality of ribbon Schur Q-functions: equality
//! classes, classes generated by equality-preserving moves, identity suites,
//! inequality certificates and reports.

pub mod classes;
pub mod cli;
pub mod config;
pub mod report;
pub mod suites;
pub mod witness;

pub use classes::{classes, closure_classes, conjecture_check, EqualityClass, Move, MoveTrace, Verdict};
pub use config::{Format, RunConfig};
pub use report::{build_report, export_report, ClassReport};
pub use witness::{inequality_witness, Witness};
