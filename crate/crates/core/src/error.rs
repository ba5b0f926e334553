use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("matrix is not square ({rows} rows, row {row} has {cols} entries)")]
    NonSquare {
        rows: usize,
        row: usize,
        cols: usize,
    },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("rank mismatch: {0}")]
    RankMismatch(String),

    #[error("integrality mismatch: {0}")]
    ParityMismatch(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("{weight} is not dominant for {group}")]
    NotDominant { group: String, weight: String },

    #[error("polynomial is not symmetric under t -> 1/t")]
    Asymmetric,

    #[error("unsupported pair: {0}")]
    UnsupportedPair(String),

    #[error(
        "leading exponent {exponent} is not dominant for {group}; input is not Weyl-invariant"
    )]
    NonDominantLeading { group: String, exponent: String },

    #[error("decomposition did not terminate within {0} steps; malformed input")]
    IterationCap(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("coefficient does not fit in 64 bits")]
    Overflow,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
