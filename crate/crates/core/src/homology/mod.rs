//! Magnitude homology of tope graphs and the identities it satisfies.

pub mod chains;
pub mod checks;
pub mod conjectures;
pub mod engine;
pub mod geodesic;
pub mod snf;
pub mod table;

pub use geodesic::{geodesic_betti_formula, geodesic_homology_direct};
pub use conjectures::{conjecture_probes, ConjectureReport, ProbeStatus};
pub use checks::{run_checks, CheckInputs, CheckMap, CheckStatus};
pub use engine::{default_length, fitted_length, magnitude_homology, HomologyOptions, HomologyResult, DEFAULT_BUDGET};
pub use table::{BettiTable, HomologySummand};
