use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    DimensionMismatch { op: &'static str, expected: String, found: String },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("non-finite entry in {0}")]
    NonFinite(&'static str),
    #[error("direction is not a unit vector (norm {0})")]
    NonUnitDirection(f64),
    #[error("mass must be positive for {0}")]
    ZeroMass(&'static str),
    #[error("invalid momentum: {0}")]
    InvalidMomentum(String),
    #[error("invalid convention: {0}")]
    InvalidConvention(String),
    #[error("field strength is not antisymmetric (defect {0})")]
    NotAntisymmetric(f64),
    #[error("mass sequence must be positive and strictly decreasing")]
    BadMassSequence,
    #[error("momentum label set is not closed under negation (missing {0})")]
    NotNegationClosed(i32),
    #[error("quaternion phase is not unit norm (norm {0})")]
    NonUnitQuaternion(f64),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
