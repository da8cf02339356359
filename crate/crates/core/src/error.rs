use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter lies outside the admissible domain.
    #[error("parameter {name} = {value} is outside the admissible domain: {reason}")]
    Domain {
        name: &'static str,
        value: String,
        reason: &'static str,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("size mismatch: {0}")]
    Mismatch(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    /// Non-generic parameters: a vanishing Pochhammer denominator or an
    /// eigenvalue collision.
    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("pole hit while evaluating {0}")]
    Pole(&'static str),

    #[error("singular linear system after {retries} resampling attempts")]
    Singular { retries: u32 },

    #[error("infinite product did not reach tolerance within {cap} factors")]
    TruncationCap { cap: usize },

    #[error("vanishing modulus in square-root branch at x = {0}")]
    Branch(f64),

    #[error("structural failure: {0}")]
    Structure(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
