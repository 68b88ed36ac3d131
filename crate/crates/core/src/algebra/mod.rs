//! Exact arithmetic in one variable: integers, rationals, polynomials,
//! rational functions and truncated power series.

pub mod cyclotomic;
pub mod linear;
pub mod poly;
pub mod rational;
pub mod ratfunc;

pub use cyclotomic::{cyclotomic, cyclotomic_factor, CyclotomicFactorization};
pub use linear::PolyMatrix;
pub use poly::{q_number_product, IntPoly};
pub use rational::{format_rational, parse_rational};
pub use ratfunc::{pade, PowerSeriesPrefix, RatFunc};
