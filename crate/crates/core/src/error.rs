use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at alpha = {0}")]
    Pole(String),
    #[error("substitution produces an identically vanishing denominator")]
    VanishingDenominator,
    #[error("ambient variable count mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("node ({row}, {col}) is outside the diagram of {composition}")]
    NodeOutsideDiagram {
        row: usize,
        col: usize,
        composition: String,
    },
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("{0} is not a partition")]
    NotAPartition(String),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("{0} has repeated parts")]
    NonDistinctParts(String),
    #[error("{0} is not strictly decreasing")]
    NotStrictlyDecreasing(String),
    #[error("partition {partition} has more than {n} nonzero parts")]
    PartitionTooLong { partition: String, n: usize },
    #[error("eigenvalue collision at alpha = {0}")]
    EigenvalueCollision(String),
    #[error("degree {degree} exceeds truncation bound {bound}")]
    DegreeOutOfRange { degree: u32, bound: u32 },
    #[error("not proportional: {0}")]
    NotProportional(String),
    #[error("linear system is singular or inconsistent")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
