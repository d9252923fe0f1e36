use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    InvalidPrime(u64),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("bad dimensions: {0}")]
    BadDimensions(String),
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },
    #[error("operation requires a prime field, got {0}")]
    UnsupportedField(String),
    #[error("{what}: {needed} exceeds cap {cap}")]
    CapExceeded { what: &'static str, needed: u128, cap: u128 },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not a subalgebra")]
    NotASubalgebra,
    #[error("subspace is not a maximal subalgebra")]
    NotMaximal,
    #[error("algebra is not solvable")]
    NotSolvable,
    #[error("element is not eligible for exp(ad x)")]
    NotEligible,
    #[error("subalgebra is not core-free")]
    NotCoreFree,
    #[error("subspace is not a complement to the given ideal")]
    NotAComplement,
    #[error("hypothesis not met: L^2 is not nilpotent of class below the characteristic")]
    HypothesisNotMet,
    #[error("subalgebras are not conjugate")]
    NotConjugate,
    #[error("no conjugating element found")]
    NoConjugatorFound,
    #[error("search exhausted without a conjugating element")]
    SearchExhausted,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("parameter error: {0}")]
    InvalidParameter(String),
    #[error("random generation failed after {0} attempts")]
    GenerationFailed(usize),
}

impl Error {
    /// Stable snake_case tag for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidPrime(_) => "invalid_prime",
            Error::FieldMismatch(..) => "field_mismatch",
            Error::AmbientMismatch(..) => "ambient_mismatch",
            Error::BadDimensions(_) => "bad_dimensions",
            Error::JacobiViolation { .. } => "jacobi_violation",
            Error::UnsupportedField(_) => "unsupported_field",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::NotAnIdeal => "not_an_ideal",
            Error::NotASubalgebra => "not_a_subalgebra",
            Error::NotMaximal => "not_maximal",
            Error::NotSolvable => "not_solvable",
            Error::NotEligible => "not_eligible",
            Error::NotCoreFree => "not_core_free",
            Error::NotAComplement => "not_a_complement",
            Error::HypothesisNotMet => "hypothesis_not_met",
            Error::NotConjugate => "not_conjugate",
            Error::NoConjugatorFound => "no_conjugator_found",
            Error::SearchExhausted => "search_exhausted",
            Error::VerificationFailed(_) => "verification_failed",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::GenerationFailed(_) => "generation_failed",
        }
    }
}
