use thiserror::Error;

use crate::network::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid network:\n{0}")]
    Invalid(ValidationReport),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("variable `{variable}` has no state `{state}`")]
    UnknownState { variable: String, state: String },

    #[error("evidence for `{0}` given more than once with different states")]
    ConflictingEvidence(String),

    #[error("assignment covers {got} of {expected} variables")]
    IncompleteAssignment { expected: usize, got: usize },

    #[error("evidence has zero likelihood; posterior is undefined")]
    ZeroLikelihood,

    #[error("quantum scores sum to zero; posterior is undefined")]
    ZeroTotalScore,

    #[error("outcome `{outcome}` expects {expected} phases, got {got}")]
    PhaseLength {
        outcome: String,
        expected: usize,
        got: usize,
    },

    #[error("no explicit phases supplied for outcome `{0}`")]
    MissingPhases(String),

    #[error("pre-normalization score {score} for outcome `{outcome}` is not realizable")]
    NegativeScore { outcome: String, score: f64 },

    #[error("sync pair pairs `{0}` with itself")]
    SelfPair(String),

    #[error("sync pair {{{0}, {1}}} declared more than once")]
    DuplicatePair(String, String),

    #[error("synchronicity angles need binary variables; `{variable}` has {states} states")]
    NonBinary { variable: String, states: usize },

    #[error("relative increase is undefined for a zero classical probability")]
    UndefinedRatio,

    #[error("invalid sweep configuration: {0}")]
    SweepConfig(String),

    #[error("{0}")]
    Csv(#[from] csv::Error),

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn from_json(err: serde_json::Error) -> Self {
        let (line, column) = (err.line(), err.column());
        let suffix = format!(" at line {line} column {column}");
        let text = err.to_string();
        let message = text.strip_suffix(&suffix).unwrap_or(&text).to_string();
        Error::Syntax { line, column, message }
    }
}
