//! Experiment orchestration: seeded corpora, the constants ledger, named
//! verification experiments, and CSV/JSON report emission.

pub mod checks;
pub mod config;
pub mod corpus;
pub mod ledger;
pub mod report;
pub mod runner;

pub use config::{ExperimentConfig, KernelSpec};
pub use ledger::ConstantsLedger;
pub use runner::run_experiment;
