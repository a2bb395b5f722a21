use thiserror::Error;

/// Errors shared by every module of the library.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {offset}: {msg}")]
    Parse { msg: String, offset: usize },

    #[error("incomplete substitution: no image for variable `{0}`")]
    IncompleteSubstitution(String),

    #[error("not a parameter at p: {0}")]
    NotAParameter(String),

    #[error("truncation order must be positive")]
    BadTruncation,

    #[error("variable lists do not match: {0}")]
    VarMismatch(String),

    #[error("point not on the variety")]
    PointNotOnVariety,

    #[error("zero ideal")]
    ZeroIdeal,

    #[error("unit ideal")]
    UnitIdeal,

    #[error("empty Newton set")]
    EmptyNewtonSet,

    #[error("raise truncation: certified degree {have} is below required {need}")]
    RaiseTruncation { have: u32, need: u32 },

    #[error("truncation cap {0} exceeded; {1}")]
    TruncationCap(u32, String),

    #[error("plot supports plane curves only")]
    PlotDimension,

    #[error("too large: {0}")]
    TooLarge(String),

    #[error("exponent overflow; use order-only")]
    ExponentOverflow,

    #[error("change coordinates first: `{0}` is not a coordinate of the current system")]
    NotACoordinate(String),

    #[error("not a maximal-contact ideal")]
    NoMaximalContact,

    #[error("already smooth")]
    AlreadySmooth,

    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
