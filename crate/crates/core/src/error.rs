use thiserror::Error;

/// Errors raised across the toolkit.
///
/// Mathematical check *failures* (an axiom that does not hold, two sides of
/// an identity that differ) are reported through report structs, not through
/// this type. These variants cover malformed input and violated
/// preconditions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("cyclotomic order must be at least 1, got {0}")]
    InvalidOrder(i64),

    #[error("syntax error in scalar literal {text:?} at byte {pos}: {msg}")]
    Syntax { text: String, pos: usize, msg: String },

    #[error("literal {0:?} uses z but the field is the rationals (order 1)")]
    RootOfUnityOverRationals(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("integral space has dimension {0}, expected 1")]
    IntegralSpace(usize),

    #[error("integral pairing vanishes: lambda(Lambda) = 0")]
    DegeneratePairing,

    #[error("algebra is not semisimple (epsilon(Lambda) = 0)")]
    NotSemisimple,

    #[error("not a Hopf automorphism: {0}")]
    NotAutomorphism(String),

    #[error("automorphism order exceeds the search cap {0}")]
    OrderCapExceeded(u64),

    #[error("automorphism order {order} does not divide {n}")]
    OrderDoesNotDivide { order: u64, n: u64 },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("module is not concentrated in a single degree")]
    NotSingleDegree,

    #[error("indicator formulas disagree: {0}")]
    Inconsistent(String),

    #[error("invalid file: {0}")]
    Format(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownCatalog(String),
}

pub type Result<T, E = HopfError> = std::result::Result<T, E>;
