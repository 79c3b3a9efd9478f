use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system {label}{rank} (supported: A1-A4, B2-B3, C2-C3, D4, G2)")]
    UnsupportedType { label: String, rank: usize },

    #[error("letter {letter} out of range 1..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },

    #[error("weight {weight:?} has {got} coordinates, expected {expected}")]
    WeightArity { weight: Vec<i64>, got: usize, expected: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    #[error("word {word:?} has length {got}, expected a reduced word of the longest element (length {expected})")]
    NotLongestWord { word: Vec<usize>, got: usize, expected: usize },

    #[error("{what} exceeded cap of {cap}")]
    CapExceeded { what: String, cap: usize },

    #[error("crystal of highest weight {lambda:?} exceeds node cap {cap}")]
    CrystalTooLarge { lambda: Vec<i64>, cap: usize },

    #[error("string parametrization collides on B({lambda:?}): {psi:?}")]
    NotInjective { lambda: Vec<i64>, psi: Vec<i64> },

    #[error("peel of node {node} in B({lambda:?}) ended away from the highest node")]
    PeelIncomplete { lambda: Vec<i64>, node: usize },

    #[error("empty point set")]
    EmptyInput,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("cone is not pointed")]
    NotPointed,

    #[error("grading {0:?} is not strictly positive on the cone")]
    BadGrading(Vec<i64>),

    #[error("section is unbounded along ray {ray:?}")]
    UnboundedSection { ray: Vec<i64> },

    #[error("integer {0} does not fit in 64 bits")]
    Overflow(String),

    #[error("pair {phi:?} / {psi:?} is not strictly lexicographically increasing")]
    InvalidPair { phi: Vec<i64>, psi: Vec<i64> },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn at_stage(self, stage: &'static str) -> Error {
        Error::Stage { stage, source: Box::new(self) }
    }

    /// Innermost stage label, if any.
    pub fn stage(&self) -> Option<&'static str> {
        match self {
            Error::Stage { stage, .. } => Some(stage),
            _ => None,
        }
    }
}
