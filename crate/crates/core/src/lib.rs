//! The n-Queens graph `Q(n)`: the graph on the squares of an `n x n` board
//! where two squares are adjacent when a queen on one attacks the other.
//!
//! The crate is organised by concern:
//!
//! * [`board`]: geometry, adjacency, degree and size formulas.
//! * [`exactlin`]: big-integer/rational matrices and integer polynomials.
//! * [`cliquepart`]: edge clique partitions and the least-eigenvalue bound they give.
//! * [`spectra`]: floating spectrum, exact eigenvector families, integer eigenvalues.
//! * [`combinat`]: exact small-board solvers (stability, clique, coloring, domination).
//! * [`equipart`]: the folded equitable partition and its divisor matrix.
//!
//! Every multiplicity or rank claim made by this crate is decided in exact
//! arithmetic; floating point is only used to produce the full spectrum.

pub mod board;
pub mod cliquepart;
pub mod combinat;
pub mod equipart;
pub mod error;
pub mod exactlin;
pub mod graph;
pub mod limits;
pub mod spectra;

pub use board::{BoardCoord, PeripheralPartition, QueensGraph};
pub use error::{Error, Result};
pub use graph::{Graph, SimpleGraph};
pub use limits::SearchLimits;
