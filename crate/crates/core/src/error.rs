use thiserror::Error;

/// Errors produced while building or checking a game.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("free type representation is empty")]
    EmptyRep,
    #[error("x_{index} must be at least {min}")]
    BoundViolation { index: usize, min: u64 },
    #[error("a game needs at least 4 players, got {n}")]
    TooSmall { n: u64 },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("not a parsimonious game: {0}")]
    NotParsimonious(String),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
    #[error("twin routes disagree: transposed incidence matrix differs from the twin's incidence matrix")]
    TwinMismatch,
    #[error("linear system is singular")]
    SingularSystem,
    #[error("{what} needs n <= {max}, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("n = {n} outside the supported range {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
