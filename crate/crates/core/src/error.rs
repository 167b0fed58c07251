use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("leading coefficient {0} is not invertible")]
    NonInvertibleLeading(String),
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is not irreducible")]
    ReducibleModulus(String),
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("search bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("polynomial has a repeated root")]
    RepeatedRoot,
    #[error("degree {0} is outside the supported range")]
    UnsupportedDegree(usize),
    #[error("polynomial is reducible: {0}")]
    Reducible(String),
    #[error("classification inconclusive, candidates {0:?}")]
    Unknown(Vec<String>),
    #[error("permutation degree mismatch ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("invalid cycle notation at byte {offset}: {message}")]
    CycleSyntax { offset: usize, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
