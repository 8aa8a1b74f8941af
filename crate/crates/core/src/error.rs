use thiserror::Error;

/// Everything that can go wrong inside the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different ring contexts")]
    ContextMismatch,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("variable `{name}` has weight {weight}; weights must be positive and even")]
    BadWeight { name: String, weight: u32 },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` is still unbound")]
    UnboundVariable(String),
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("polynomial `{0}` is not homogeneous")]
    Inhomogeneous(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("torus element is not regular: root {root} vanishes")]
    NonRegular { root: String },
    #[error("vector field of h is not diagonal-linear in coordinate `{0}`")]
    NotDiagonalLinear(String),
    #[error("Bialynicki-Birula weight of `{name}` is {weight}; expected a positive even integer")]
    BadBbWeight { name: String, weight: i64 },
    #[error("simple root index {index} out of range for rank {rank}")]
    BadRootIndex { index: usize, rank: usize },
    #[error("unsupported combination: {0}")]
    Unsupported(String),
    #[error("fiber is positive-dimensional")]
    PositiveDimensionalFiber,
    #[error("component extraction unavailable: {0}")]
    ComponentsUnavailable(String),
    #[error("generator {index} has degree {got}, expected {expected} (homogeneous regular sequence)")]
    HomogeneityViolation { index: usize, expected: i64, got: String },
    #[error("grammar error in `{input}`: {msg}")]
    Grammar { input: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
