use thiserror::Error;

/// Errors produced by the algebra and enumeration layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("basis mismatch: expected {expected}, got {got}")]
    BasisMismatch { expected: String, got: String },

    #[error("color arity mismatch: expected r={expected}, got r={got}")]
    ArityMismatch { expected: u8, got: u8 },

    #[error("enumeration budget exceeded: r^n*n! = {work} > budget {budget}")]
    BudgetExceeded { work: u128, budget: u128 },

    #[error("series has a non-unit constant term, cannot invert")]
    NonUnitConstant,

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("truncation orders differ: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    #[error("unsupported basis conversion: {from} -> {to}")]
    UnsupportedConversion { from: String, to: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
