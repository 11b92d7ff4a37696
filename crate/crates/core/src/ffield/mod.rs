//! Finite-field brute force: commuting matrix tuples over small prime
//! fields, their point counts, and searches over commutative algebras.

mod algebra;
mod classify;
mod counts;
mod lmax;
mod matrix;
mod wspace;

pub use algebra::{algebra_closure, spanning_index, Algebra};
pub use classify::{classify_d2, classify_d2_rational, D2Class};
pub use counts::{
    blowup_count_identity, gl_order, hilb2_point_count_species, quot_census, quot_point_count,
    singular_count, BlowupCount, QuotCensus,
};
pub use lmax::{lmax_search, LmaxSearch};
pub use matrix::{check_prime, MatrixModP, SUPPORTED_PRIMES};
pub use wspace::{is_id_plus_square_zero, w_space, WSpace};
