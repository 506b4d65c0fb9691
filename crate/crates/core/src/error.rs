use thiserror::Error;

use crate::semiring::SemiringKind;

/// A star that could not be produced. These are ordinary outcomes of the
/// algorithms, not faults in the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StarError {
    #[error("star is undefined in the {0} semiring")]
    Undefined(SemiringKind),
    #[error("partial sums of powers are not stationary after {iterations} iterations")]
    NotStationary { iterations: usize },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("operands belong to different semirings ({left} and {right})")]
    SemiringMismatch { left: SemiringKind, right: SemiringKind },
    #[error("shape mismatch: {op} of {lhs:?} and {rhs:?}")]
    ShapeMismatch {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix entries: expected {expected}, got {actual}")]
    EntryCount { expected: usize, actual: usize },
    #[error("{0} requires a ring but the {1} semiring has no additive inverses")]
    NotARing(&'static str, SemiringKind),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("letter {0:?} is not in the alphabet")]
    ForeignLetter(String),
    #[error("alphabets do not match")]
    AlphabetMismatch,
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("unknown semiring {0:?}")]
    UnknownSemiring(String),
    #[error(transparent)]
    Star(#[from] StarError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.into(),
        }
    }

    /// True when the error reports a missing star rather than bad input.
    pub fn is_star(&self) -> bool {
        matches!(self, Error::Star(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
