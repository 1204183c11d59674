use thiserror::Error;

/// Errors produced by instance validation, the solvers, and the data structures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variant {variant} requires field `{field}`")]
    MissingField { variant: String, field: String },

    #[error("bad gap constraint ({lower},{upper}): lower bound exceeds upper bound")]
    BadConstraint { lower: u32, upper: u32 },

    #[error("gap tuple has {got} constraints, expected {expected}")]
    BadTupleLength { got: usize, expected: usize },

    #[error("letter {letter} out of range [1..{sigma}]")]
    BadLetter { letter: u32, sigma: u32 },

    #[error("gap tuple is not increasing")]
    NotIncreasing,

    #[error("gap tuple is not synchronized")]
    NotSynchronized,

    #[error("range bound {bound} out of range [1..{max}]")]
    BadRangeBound { bound: u32, max: usize },

    #[error("index ({i},{j}) out of range for a {m}x{n} grid")]
    OutOfRange {
        i: usize,
        j: usize,
        m: usize,
        n: usize,
    },

    #[error("range maximum query on a non-square region ({rows} rows x {cols} cols)")]
    NonSquareQuery { rows: usize, cols: usize },

    #[error("instance size {size} exceeds the oracle cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("algorithm `{algorithm}` is not applicable to variant {variant}")]
    UnsupportedAlgorithm { algorithm: String, variant: String },

    #[error("invalid instance JSON: {0}")]
    Json(String),
}

impl Error {
    /// Stable machine-readable error code, used in the CLI's error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MissingField { .. } => "MissingField",
            Error::BadConstraint { .. } => "BadConstraint",
            Error::BadTupleLength { .. } => "BadTupleLength",
            Error::BadLetter { .. } => "BadLetter",
            Error::NotIncreasing => "NotIncreasing",
            Error::NotSynchronized => "NotSynchronized",
            Error::BadRangeBound { .. } => "BadRangeBound",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::NonSquareQuery { .. } => "NonSquareQuery",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::UnsupportedAlgorithm { .. } => "UnsupportedAlgorithm",
            Error::Json(_) => "Json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
