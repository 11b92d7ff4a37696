//! Exact computations on Quot schemes of points.
//!
//! The crate computes Poincaré polynomials of Quot and Hilbert schemes of
//! points from closed forms and from torus-fixed-point (Białynicki-Birula)
//! cell counts, and checks them against brute-force point counts over small
//! prime fields. Every number is an exact integer.
//!
//! Polynomials are in the variable `q`, which carries cohomological degree 2.

pub mod bb_hilb2;
pub mod bb_rcells;
pub mod budget;
pub mod error;
pub mod ffield;
pub mod grassmann;
pub mod polyseries;
pub mod quot_formulas;
pub mod report;

pub use budget::Budget;
pub use error::{Error, Result};
pub use polyseries::{
    agree_up_to, Agreement, Coefficients, Degree, IntPolynomial, TruncatedSeries,
};
pub use report::{IdentityCheck, Mismatch, NamedResult, ResultValue, RunReport, Status};
