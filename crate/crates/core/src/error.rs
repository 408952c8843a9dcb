use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element has zero norm and no inverse")]
    ZeroElement,

    #[error("expected a {expected}-qubit state, got {found} qubits")]
    WrongQubitCount { expected: usize, found: usize },

    #[error("qubit count {0} is outside the supported range 1..=4")]
    UnsupportedQubitCount(usize),

    #[error("amplitude vector has length {len}, expected {expected}")]
    AmplitudeLength { len: usize, expected: usize },

    #[error("state norm {norm} is too far from 1 to renormalize")]
    NotNormalizable { norm: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{what} must have unit norm, got {norm}")]
    NonUnit { what: &'static str, norm: f64 },

    #[error("matrix determinant {0} is not 1")]
    NonUnitDeterminant(f64),

    #[error("matrix is not a proper rotation")]
    NotRotation,

    #[error("invalid group element: {0}")]
    InvalidGroupElement(String),

    #[error("invalid qubit index {index} for a {qubits}-qubit state")]
    InvalidQubitIndex { index: usize, qubits: usize },

    #[error("invalid region: {0}")]
    InvalidRegion(String),

    #[error("operation not defined at the {0} level")]
    UnsupportedLevel(&'static str),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}
