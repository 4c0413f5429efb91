use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension {got} is below the minimum {min}")]
    DimensionTooSmall { got: usize, min: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("vector is not a unit vector (squared norm {0})")]
    NotUnit(String),

    #[error("spin words must have even length, got {0}")]
    OddWord(usize),

    #[error("conjugation left the span of the gamma matrices")]
    LeftVectorSpan,

    #[error("phase is not an exact point on the unit circle")]
    NotUnitPhase,

    #[error("phase has no exact square root witness")]
    NoHalfAngle,

    #[error("class constraint violated: {0}")]
    ClassConstraint(String),

    #[error("matrix is not in the expected group: {0}")]
    NotInGroup(String),

    #[error("block structure violated: {0}")]
    BlockStructure(String),

    #[error("basis does not span: rank {rank} < {expected}")]
    NotSpanning { rank: usize, expected: usize },

    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error("invalid tangent vector: {0}")]
    InvalidTangent(String),

    #[error("tangent vector is not in the contact distribution")]
    NotHorizontal,

    #[error("zero covector")]
    ZeroCovector,

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("invalid range {0:?}")]
    InvalidRange(String),

    #[error("unknown format {0:?}")]
    UnknownFormat(String),

    #[error("unknown mode {0:?}")]
    UnknownMode(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
