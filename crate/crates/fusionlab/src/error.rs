use thiserror::Error;

use crate::catalog::AlgebraKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid level {k} for {algebra} (minimum {min})")]
    InvalidLevel {
        algebra: AlgebraKind,
        k: i64,
        min: u32,
    },

    #[error("sign(i,j,l) needs i+j+l even, got ({i},{j},{l})")]
    Parity { i: i64, j: i64, l: i64 },

    #[error("sign mismatch for {0}")]
    SignMismatch(String),

    #[error("label {label} is out of range at level {k}")]
    OutOfRange { label: String, k: u32 },

    #[error("cannot parse label {0:?}")]
    Parse(String),

    #[error("label {label} does not belong to algebra {algebra}")]
    WrongAlgebra { label: String, algebra: AlgebraKind },

    #[error("no conformal weight formula for {0}")]
    Unsupported(String),

    #[error("quantum dimensions at different levels ({0} vs {1})")]
    LevelMismatch(u32, u32),

    #[error("requested {requested} digits but the precision ceiling is {ceiling}")]
    PrecisionUnavailable { requested: usize, ceiling: usize },

    #[error("no fusion clause matches {left} x {right}")]
    InternalDispatchGap { left: String, right: String },

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("cannot apply mutation: {0}")]
    Mutation(String),

    #[error("malformed table document: {0}")]
    Table(String),

    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),
}

pub type Result<T> = std::result::Result<T, Error>;
