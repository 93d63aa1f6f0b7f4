use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Digit `index` (1-based) was needed but the spec or budget stops earlier.
    #[error("digit {index} is beyond the available digits")]
    RDigitBudgetExceeded { index: usize },
    #[error("denominator {q} is not invertible modulo {m}")]
    NonInvertibleDenominator { q: String, m: u64 },
    #[error("operation not supported for this parameter kind: {0}")]
    UnsupportedSpecKind(&'static str),
    #[error("first digit is not coprime to the modulus, no unit realizes this prefix")]
    NoUnitRealization,
    #[error("invalid parameter: {0}")]
    InvalidSpec(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("element is outside the domain of the stable-letter isomorphism")]
    PinchDomainViolation,
    #[error("the zero element has no fixed interval")]
    ZeroElement,
    #[error("forms do not have matching stable-letter patterns")]
    ShapeMismatch,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("gcd mismatch: both parameters must be units (gcds {0} and {1})")]
    GcdMismatch(u64, u64),
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("no differing digit found within the budget")]
    SameGroup,
    #[error("digit-stream comparison is undecidable for these parameter kinds")]
    UndecidableSpec,
    #[error("oracle answers are inconsistent at level {level}")]
    OracleInconsistent { level: usize },
    #[error("invalid automorphism: {0}")]
    InvalidAutSpec(String),
}

impl Error {
    /// Stable short code used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RDigitBudgetExceeded { .. } => "digit-budget",
            Error::NonInvertibleDenominator { .. } => "non-invertible-denominator",
            Error::UnsupportedSpecKind(_) => "unsupported-spec-kind",
            Error::NoUnitRealization => "no-unit-realization",
            Error::InvalidSpec(_) => "invalid-spec",
            Error::Parse { .. } => "parse",
            Error::PinchDomainViolation => "pinch-domain",
            Error::ZeroElement => "zero-element",
            Error::ShapeMismatch => "shape-mismatch",
            Error::PreconditionViolated(_) => "precondition",
            Error::GcdMismatch(..) => "gcd-mismatch",
            Error::ModulusMismatch(..) => "modulus-mismatch",
            Error::SameGroup => "same-group",
            Error::UndecidableSpec => "undecidable-spec",
            Error::OracleInconsistent { .. } => "oracle-inconsistent",
            Error::InvalidAutSpec(_) => "invalid-aut",
        }
    }

    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse { offset, message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
