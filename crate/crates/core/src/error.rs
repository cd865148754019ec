use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("n = {n} exceeds the enumeration guard {guard}")]
    TooLarge { n: usize, guard: usize },

    #[error("{kind}: n = {n} is below the validity threshold {threshold}; use small_n_max below it")]
    BelowThreshold { kind: &'static str, n: usize, threshold: usize },

    #[error("invalid argument: {0}")]
    Domain(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("cannot parse shape `{input}`: {reason}")]
    ShapeSyntax { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, CoreError>;
