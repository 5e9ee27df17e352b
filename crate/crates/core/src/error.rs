use thiserror::Error;

use crate::braid::BraidWord;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("scalars from different fields in one expression: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("{0} is not a prime below 2^32")]
    BadModulus(u64),

    #[error("cannot parse scalar {0:?}")]
    ScalarParse(String),

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("illegal move {mv} at position {position}: found {found:?}, {expected}")]
    IllegalMove {
        mv: String,
        position: usize,
        found: Vec<u8>,
        expected: String,
    },

    #[error("step {step} of the script is illegal: {cause}")]
    IllegalStep {
        step: usize,
        cause: Box<Error>,
        trace: Vec<BraidWord>,
    },

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: u8, strands: u8 },

    #[error("{0}")]
    Script(#[from] crate::braid::ScriptError),

    #[error("unsupported built-in script {0:?}")]
    UnknownBuiltin(String),

    #[error("degenerate intersection for {which}: <{left}> meets <{right}> in dimension {dim}")]
    DegenerateIntersection {
        which: String,
        left: String,
        right: String,
        dim: usize,
    },

    #[error("degenerate normalization: {0}")]
    DegenerateNormalization(String),

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("no valid point found after {0} attempts")]
    SamplingExhausted(usize),

    #[error("bad Pluecker index {0:?}: {1}")]
    BadIndex(Vec<usize>, String),

    #[error("generator {generator} does not act on family {family}")]
    FamilyMismatch { generator: String, family: String },

    #[error("word {word} degenerates after prefix {prefix:?}: {cause}")]
    WordDegenerate {
        word: String,
        prefix: String,
        cause: Box<Error>,
    },

    #[error("cannot parse word token {0:?}")]
    BadToken(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for the errors that mean "this point is not generic enough",
    /// which harnesses answer by re-sampling.
    pub fn is_degeneracy(&self) -> bool {
        match self {
            Error::DegenerateIntersection { .. }
            | Error::DegenerateNormalization(_)
            | Error::InvalidPoint(_)
            | Error::DivisionByZero => true,
            Error::WordDegenerate { cause, .. } => cause.is_degeneracy(),
            _ => false,
        }
    }
}
