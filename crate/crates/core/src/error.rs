use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("qubit index {index} out of range 1..={n}")]
    QubitOutOfRange { index: usize, n: usize },

    #[error("gate `{label}` acts on {arity} qubit(s) but {given} target(s) were given")]
    ArityMismatch { label: String, arity: usize, given: usize },

    #[error("matrix for gate `{0}` is not unitary")]
    NotUnitary(String),

    #[error("unknown state name `{0}`")]
    UnknownState(String),

    #[error("oracle value {value} at input {input} exceeds the output range 0..{limit}")]
    OracleRange { input: usize, value: u64, limit: u64 },

    #[error("field has a pole at {location}")]
    PoleEvaluation { location: Complex64 },

    #[error("roots of the zero polynomial are undefined")]
    ZeroPolynomial,

    #[error("the zero field has no defect structure")]
    ZeroField,

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("no well-conditioned evaluation point: best alpha {best_alpha} has condition {condition:e}")]
    Conditioning { best_alpha: Complex64, condition: f64 },

    #[error("quadrature needs at least {required} nodes, got {given}")]
    InsufficientNodes { required: usize, given: usize },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// True for failures of a numerical procedure, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Conditioning { .. } | Error::PoleEvaluation { .. } | Error::ZeroPolynomial
        )
    }
}
