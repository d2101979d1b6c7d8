use thiserror::Error;

/// Errors raised by constructors, constructions and the structure-file layer.
///
/// Axiom failures are never errors: they are reported through
/// [`AxiomReport`](crate::report::AxiomReport). Errors are reserved for
/// malformed input and refused constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("NOT_ENDOMORPHISM: the map is not an algebra endomorphism")]
    NotEndomorphism,

    #[error("NOT_COENDOMORPHISM: the map is not a Poisson coalgebra endomorphism")]
    NotCoendomorphism,

    #[error("ALREADY_TWISTED: the structure map is already twisted (alpha is not the identity)")]
    AlreadyTwisted,

    #[error("NOT_ANTICOMMUTING: mu(x, y) != -mu(y, x)")]
    NotAnticommuting,

    #[error("WRONG_SIDE: expected a {expected} module")]
    WrongSide { expected: &'static str },

    #[error("KIND_MISMATCH: operation needs a {expected} comodule, got {found}")]
    KindMismatch { expected: &'static str, found: &'static str },

    #[error("ALGEBRA_MISMATCH: modules are over different algebras")]
    AlgebraMismatch,

    #[error("COALGEBRA_MISMATCH: comodules are over different coalgebras")]
    CoalgebraMismatch,

    #[error("invalid rational {0:?}")]
    InvalidRational(String),

    #[error("unknown axiom {0:?}")]
    UnknownAxiom(String),

    #[error("matrix algebra size {0} out of range (1..=3)")]
    MatrixSizeOutOfRange(usize),

    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    /// Stable upper-case code, as printed by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "DIMENSION_MISMATCH",
            Error::NotEndomorphism => "NOT_ENDOMORPHISM",
            Error::NotCoendomorphism => "NOT_COENDOMORPHISM",
            Error::AlreadyTwisted => "ALREADY_TWISTED",
            Error::NotAnticommuting => "NOT_ANTICOMMUTING",
            Error::WrongSide { .. } => "WRONG_SIDE",
            Error::KindMismatch { .. } => "KIND_MISMATCH",
            Error::AlgebraMismatch => "ALGEBRA_MISMATCH",
            Error::CoalgebraMismatch => "COALGEBRA_MISMATCH",
            Error::InvalidRational(_) => "INVALID_RATIONAL",
            Error::UnknownAxiom(_) => "UNKNOWN_AXIOM",
            Error::MatrixSizeOutOfRange(_) => "OUT_OF_RANGE",
            Error::Format(_) => "FORMAT",
        }
    }

    /// Whether the error comes from bad input (as opposed to a refused
    /// construction on well-formed input).
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch(_) | Error::InvalidRational(_) | Error::UnknownAxiom(_) | Error::Format(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dim_mismatch(what: impl Into<String>) -> Error {
    Error::DimensionMismatch(what.into())
}
