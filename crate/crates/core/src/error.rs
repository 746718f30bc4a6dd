use dashu_int::IBig;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial must have degree >= 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("polynomial is reducible: found factor {factor}")]
    Reducible { factor: String },
    #[error("Z[alpha] is not the maximal order: Dedekind's criterion fails at p = {p}")]
    NotMaximal { p: IBig },
    #[error("no irreducibility certificate found for primes up to {bound}; pass the override flag to accept")]
    IrreducibilityUnknown { bound: u64 },
    #[error("discriminant cofactor {cofactor} could not be factored; maximality cannot be certified")]
    MaximalityUnknown { cofactor: IBig },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("{0} is not prime")]
    NotPrime(IBig),
    #[error("ideal generated by zero")]
    ZeroIdeal,
    #[error("element is not integral")]
    NotIntegral,
    #[error("no basis row of the level-{level} ideal escapes the next power")]
    DegenerateLevel { level: usize },
    #[error("log2 |det| = {computed} deviates from the expected {expected} (relative error {rel_error:e})")]
    DeterminantMismatch {
        computed: f64,
        expected: f64,
        rel_error: f64,
    },
    #[error("lattice rank {rank} exceeds supported maximum {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("brute-force search bound too large: {0}")]
    BoundTooLarge(String),
    #[error("argument outside domain: {0}")]
    DomainError(String),
    #[error("ceiling of minima ratio at level {level} is ambiguous at the current precision")]
    AmbiguousCeiling { level: usize },
    #[error("parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },
    #[error("no code table entry for q={q}, n={n} with distance >= {d}")]
    MissingEntry { q: u64, n: u64, d: u64 },
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("instance too large for explicit enumeration: {0}")]
    ScaleTooLarge(String),
    #[error("invalid configuration: {0}")]
    Validation(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::MissingEntry { .. } => 3,
            Error::PrecisionExhausted(_)
            | Error::DeterminantMismatch { .. }
            | Error::AmbiguousCeiling { .. } => 4,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
