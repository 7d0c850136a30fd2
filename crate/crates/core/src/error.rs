use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate identifier `{0}`")]
    Duplicate(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("element `{0}` has no carrier")]
    MissingCarrier(String),
    #[error("carrier {carrier} is not an element of the space")]
    Closure { carrier: String },
    #[error("size limit exceeded: {0}")]
    Size(String),
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("degenerate space: {0}")]
    Degenerate(String),
    #[error("undefined measure: {0}")]
    UndefinedMeasure(String),
    #[error("functions are defined over different spaces")]
    MismatchedSpaces,
    #[error("unbound function name `{0}`")]
    Unbound(String),
    #[error("parse error at position {position}: expected {expected}, found {found}")]
    Parse {
        position: usize,
        expected: String,
        found: String,
    },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Errors that reflect a property of well-formed input (a missing carrier,
    /// an empty upper approximation) rather than malformed input.
    pub fn is_semantic(&self) -> bool {
        matches!(
            self,
            Error::MissingCarrier(_)
                | Error::Closure { .. }
                | Error::Degenerate(_)
                | Error::UndefinedMeasure(_)
        )
    }
}
