use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("limit {limit} exceeds the configured maximum {max}")]
    ResourceLimit { limit: u64, max: u64 },

    #[error("{value} is outside the table range [0, {limit}]")]
    OutOfRange { value: u64, limit: u64 },

    #[error("logarithmic singularity of E1 at z = 0")]
    Singularity,

    #[error("continued fraction did not converge within {iterations} iterations")]
    NonConvergence { iterations: usize },

    #[error("s is within {distance:e} of the pole at s = 1 (guard {guard:e})")]
    PoleProximity { distance: f64, guard: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("Euler factor for p = {prime} vanishes")]
    SingularFactor { prime: u64 },

    #[error("s = 1 is excluded (pole of zeta, zero of 1/zeta)")]
    PoleExcluded,

    #[error("empty product: limit must be at least 2")]
    EmptyProduct,

    #[error("only {points} usable points for the decay fit (need at least 4)")]
    InsufficientData { points: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
