use thiserror::Error;

/// Errors produced by field construction, linear algebra, code construction
/// and the syndrome-space analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power in 2..=256")]
    NotAPrimePower(u32),

    #[error("division by zero in GF(q)")]
    DivisionByZero,

    #[error("element code {value} out of range for GF({q})")]
    InvalidElement { value: u32, q: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operands live in different fields (GF({left}) vs GF({right}))")]
    FieldMismatch { left: u32, right: u32 },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("operation not supported for code family `{0}`")]
    UnsupportedFamily(String),

    #[error("work size {needed} exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("MacWilliams transform produced a non-integer or negative entry at weight {0}")]
    NonIntegerResult(usize),

    #[error("count overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
