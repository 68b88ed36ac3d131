//! Magnitude and magnitude homology of real central hyperplane arrangements,
//! computed exactly from their tope graphs.

pub mod algebra;
pub mod arrangement;
pub mod error;
pub mod golden;
pub mod homology;
pub mod magnitude;
pub mod report;

pub use error::{Error, Result};
