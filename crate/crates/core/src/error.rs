use alloc::string::String;
use core::fmt;

use crate::algebra::{AlgebraId, Generator};

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Polynomial division left a remainder where an exact quotient was required.
    InexactDivision,
    NotSquare { rows: usize, cols: usize },
    DimensionMismatch { expected: usize, found: usize },
    InvalidGenerator { generator: Generator, algebra: AlgebraId },
    /// Partition comparison is only defined between partitions of the same integer.
    DegreeMismatch { left: u32, right: u32 },
    ParseRational(String),
    ParseGenerator(String),
    ParseAlgebra(String),
    /// A numeric weight was required but the component is symbolic.
    SymbolicWeight(&'static str),
    /// A computed determinant is not `c * (rho1^2 + rho2^2)^k`.
    Structure(String),
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InexactDivision => f.write_str("polynomial division is not exact"),
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, a square matrix is required")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::InvalidGenerator { generator, algebra } => {
                write!(f, "generator {generator} is not valid in {algebra}")
            }
            Error::DegreeMismatch { left, right } => {
                write!(f, "cannot compare partitions of {left} and {right}")
            }
            Error::ParseRational(s) => write!(f, "malformed rational `{s}`"),
            Error::ParseGenerator(s) => write!(f, "malformed generator `{s}`"),
            Error::ParseAlgebra(s) => write!(f, "unknown algebra `{s}`"),
            Error::SymbolicWeight(name) => write!(f, "weight `{name}` must be numeric"),
            Error::Structure(msg) => write!(f, "structural failure: {msg}"),
            Error::InvalidArgument(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}
