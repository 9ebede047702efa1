use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero argument: {0}")]
    ZeroArgument(&'static str),

    #[error("{0} is not an odd prime")]
    NotOddPrime(String),

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("zero denominator in literal")]
    ZeroDenominator,

    #[error("invalid variable: {0}")]
    InvalidVariable(String),

    #[error("polynomial is not weighted homogeneous")]
    NotHomogeneous,

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("not a regular sequence / not artinian: {0}")]
    NotRegular(String),

    #[error("quotient is not artinian: no pure power of `{0}` among leading terms")]
    NotArtinian(String),

    #[error("count mismatch: {0}")]
    CountMismatch(String),

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix shape error: {0}")]
    Shape(String),

    #[error("duality failure in degree {0}")]
    DualityFailure(u32),

    #[error("formal dimension {0} is not divisible by 4")]
    NotMiddleDimension(u32),

    #[error("degree {0} out of range")]
    DegreeOutOfRange(u32),

    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("invalid rational `{0}`")]
    InvalidRational(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Errors caused by the user's data rather than a bug in this crate.
    pub fn is_invalid_input(&self) -> bool {
        !matches!(self, Error::DualityFailure(_) | Error::Internal(_))
    }

    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroArgument(_) => "zero-argument",
            Error::NotOddPrime(_) => "not-odd-prime",
            Error::NotPrime(_) => "not-prime",
            Error::Syntax { .. } => "syntax",
            Error::UnknownVariable(_) => "unknown-variable",
            Error::ZeroDenominator => "zero-denominator",
            Error::InvalidVariable(_) => "invalid-variable",
            Error::NotHomogeneous => "not-homogeneous",
            Error::ZeroPolynomial => "zero-polynomial",
            Error::NotRegular(_) => "not-regular",
            Error::NotArtinian(_) => "not-artinian",
            Error::CountMismatch(_) => "count-mismatch",
            Error::InvalidRelation(_) => "invalid-relation",
            Error::Singular => "singular",
            Error::NotSymmetric => "not-symmetric",
            Error::Shape(_) => "shape",
            Error::DualityFailure(_) => "duality-failure",
            Error::NotMiddleDimension(_) => "not-middle-dimension",
            Error::DegreeOutOfRange(_) => "degree-out-of-range",
            Error::InvalidOrientation(_) => "invalid-orientation",
            Error::InvalidBasis(_) => "invalid-basis",
            Error::Infeasible(_) => "infeasible",
            Error::InvalidRational(_) => "invalid-rational",
            Error::Input(_) => "input",
            Error::Internal(_) => "internal",
        }
    }
}
