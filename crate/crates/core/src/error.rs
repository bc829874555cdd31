use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// The CLI maps these to exit codes: [`Error::BadInput`] is a user error,
/// [`Error::IdentityViolation`] means a checked identity failed, everything
/// else is an internal failure.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series denominator has zero constant term")]
    ZeroConstantTerm,
    #[error("inexact polynomial division: nonzero remainder")]
    InexactDivision,
    #[error("group closure exceeded the expected order {expected}")]
    ClosureOverflow { expected: usize },
    #[error("group closure produced {found} elements, expected {expected}")]
    WrongOrder { expected: usize, found: usize },
    #[error("element of the subgroup not found in the ambient group")]
    ElementNotFound,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("character table lift failed: {0}")]
    LiftFailure(String),
    #[error("character table orthogonality failed: {0}")]
    Orthogonality(String),
    #[error("decomposition is not a nonnegative integer combination: {0}")]
    NonIntegral(String),
    #[error("unrecognized diagram: {0}")]
    UnrecognizedDiagram(String),
    #[error("no bipartition: the diagram contains an odd cycle")]
    NoBipartition,
    #[error("orbit method unavailable: {0}")]
    OrbitUnavailable(String),
    #[error("identity violated: {identity}: {detail}")]
    IdentityViolation { identity: String, detail: String },
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn violation(identity: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::IdentityViolation {
            identity: identity.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
