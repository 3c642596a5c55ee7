use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("board size {n} is out of range: {reason}")]
    BoardSize { n: usize, reason: &'static str },

    #[error("square ({row}, {col}) is not on the {n}x{n} board")]
    BadCoord { n: usize, row: usize, col: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: String, got: String },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("main polynomial has a non-integral coefficient {coeff} at degree {degree}")]
    NonIntegralMainPoly { degree: usize, coeff: String },

    #[error("eigensolver did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("invalid edge clique partition: {0}")]
    InvalidPartition(String),

    #[error("partition is not equitable: vertex {u} has {count_u} neighbours in cell {cell}, vertex {v} has {count_v}")]
    NotEquitable {
        u: usize,
        v: usize,
        cell: usize,
        count_u: usize,
        count_v: usize,
    },

    #[error("{0}")]
    Invalid(String),
}
