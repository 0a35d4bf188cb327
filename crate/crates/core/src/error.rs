use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("determinant of size {n} exceeds the configured limit {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },
    #[error("k = {k} out of range 0..={n}")]
    BadK { k: usize, n: usize },
    #[error("star diverges: maximal cycle mean is {0}")]
    StarDiverges(String),
    #[error("star iteration did not stabilize after {0} squarings")]
    NoStabilization(usize),
    #[error("determinant is zero or balanced")]
    SingularOrBalanced,
    #[error("adjugate times right-hand side has a balanced entry")]
    UnsignedRHS,
    #[error("determinant is zero")]
    ZeroDeterminant,
    #[error("no sign assignment solves the system")]
    SearchExhausted,
    #[error("zero polynomial has no finite root structure")]
    ZeroPolynomial,
    #[error("value is not signed: {0}")]
    NotSigned(String),
    #[error("modulus polynomial is not factored")]
    NotFactoredModulus,
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not tropical positive definite: {0}")]
    NotTPD(String),
    #[error("eigenvalue with index {0} is not simple")]
    NotSimple(usize),
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("fractional power of a non-positive element")]
    FractionalPowerOfSigned,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("base t must exceed 1, got {0}")]
    BadBase(f64),
    #[error("Jacobi iteration did not converge in {0} sweeps")]
    NoConvergence(usize),
    #[error("diagonal entry {0} is not positive")]
    NonpositiveDiagonal(usize),
    #[error("diagonal entries are not pairwise distinct")]
    NotGenericDiagonal,
    #[error("bad parameters: {0}")]
    BadParams(String),
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    /// Stable identifier printed by the CLI on failure.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::NotSquare { .. } => "NotSquare",
            Error::SizeLimitExceeded { .. } => "SizeLimitExceeded",
            Error::BadK { .. } => "BadK",
            Error::StarDiverges(_) => "StarDiverges",
            Error::NoStabilization(_) => "NoStabilization",
            Error::SingularOrBalanced => "SingularOrBalanced",
            Error::UnsignedRHS => "UnsignedRHS",
            Error::ZeroDeterminant => "ZeroDeterminant",
            Error::SearchExhausted => "SearchExhausted",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotSigned(_) => "NotSigned",
            Error::NotFactoredModulus => "NotFactoredModulus",
            Error::UnsupportedCase(_) => "UnsupportedCase",
            Error::NotSymmetric => "NotSymmetric",
            Error::NotTPD(_) => "NotTPD",
            Error::NotSimple(_) => "NotSimple",
            Error::InternalMismatch(_) => "InternalMismatch",
            Error::FractionalPowerOfSigned => "FractionalPowerOfSigned",
            Error::NotInvertible => "NotInvertible",
            Error::BadBase(_) => "BadBase",
            Error::NoConvergence(_) => "NoConvergence",
            Error::NonpositiveDiagonal(_) => "NonpositiveDiagonal",
            Error::NotGenericDiagonal => "NotGenericDiagonal",
            Error::BadParams(_) => "BadParams",
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
