use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("rank must be at least 2, got {0}")]
    InvalidRank(usize),

    #[error("kappa index for rank {n} needs {expected} entries, got {got}")]
    KappaLength { n: usize, expected: usize, got: usize },

    #[error("partition {partition} has more than {n} parts")]
    TooManyParts { partition: String, n: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("expected {expected} variables, got {got}")]
    VariableCount { expected: usize, got: usize },

    #[error("degenerate evaluation point: min |x_i - x_j| = {min_separation:e} below {threshold:e}")]
    DegeneratePoint { min_separation: f64, threshold: f64 },

    #[error("combined weight {weight} exceeds the brute-force guard {guard}")]
    GuardExceeded { weight: u32, guard: u32 },

    #[error("prime {prime} is beyond the form's prime bound {bound}")]
    PrimeOutOfRange { prime: u64, bound: u64 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("kappa {0} is not palindromic; coefficients are not guaranteed real")]
    NotPalindromic(String),

    #[error("rejection sampler exceeded {0} proposals")]
    RejectionCap(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
