//! Classification layer: subsystem censuses, sparseness, constrainedness,
//! the theorem suite, and batch reports.

pub mod census;
pub mod constraint;
pub mod report;
pub mod theorems;

pub use census::{
    closed_subsystem_census, enumerate_subsystems, sparseness, SearchStats, Sparseness,
    SubsystemCensus, SubsystemWitness,
};
pub use constraint::{is_constrained, Constraint};
pub use report::{build_report, report_to_json, run_catalog_suite, SystemReport};
pub use theorems::{run_theorem_suite, TheoremVerdict};
