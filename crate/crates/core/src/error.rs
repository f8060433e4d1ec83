use thiserror::Error;

/// Errors raised by the algebraic routines.
///
/// Most variants are precondition violations on the caller's input;
/// [`Error::Internal`] marks a broken invariant inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{0}: both inputs are zero")]
    BothZero(&'static str),
    #[error("{0}: input must be nonzero")]
    ZeroInput(&'static str),
    #[error("{0}: rational function is not proper")]
    NotProper(&'static str),
    #[error("{0}: denominator is not squarefree")]
    NotSquarefree(&'static str),
    #[error("{0}: degree must be at least {1}")]
    DegreeTooSmall(&'static str, usize),
    #[error("{0}: input must be a polynomial")]
    NotPolynomial(&'static str),
    #[error("{0}: empty input")]
    EmptyInput(&'static str),
    #[error("partial fractions: parts are not pairwise coprime")]
    PartsNotCoprime,
    #[error("partial fractions: product of parts does not match the denominator")]
    PartsProductMismatch,
    #[error("polynomials are not coprime, no inverse exists")]
    NotInvertible,
    #[error("not a logarithmic derivative: {0}")]
    NotLogDerivative(String),
    #[error("cannot factor {value}: cofactor exceeds trial division bound {bound}")]
    FactorizationBound { value: String, bound: u64 },
    #[error("invalid orbit spec: {0}")]
    InvalidSpec(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// True for broken internal invariants, false for rejected inputs.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
