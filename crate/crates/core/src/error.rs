use thiserror::Error;

/// Errors shared by every engine module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("homogenization degree {target} is below the polynomial degree {actual}")]
    DegreeTooSmall { target: u32, actual: u32 },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("resolution is not minimal: {0}")]
    NonMinimal(String),

    #[error("minor size {size} exceeds the cap {cap}")]
    MinorCap { size: usize, cap: usize },

    #[error("the ideal is the unit ideal")]
    UnitIdeal,

    #[error("the projective scheme is empty")]
    EmptyScheme,

    #[error("coefficient {0} is not defined in characteristic {1}")]
    BadReduction(String, u32),

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
