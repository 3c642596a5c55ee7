//! Exact linear algebra over the integers and rationals.
//!
//! Entries are arbitrary precision throughout. Nothing here rounds.

mod matrix;
mod poly;

pub use matrix::{int_matvec, int_rank, rat_kernel, rat_rank, IntMatrix, RatMatrix};
pub use poly::{char_poly, integer_roots, main_poly, poly_divides, IntPoly};
