use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("argument outside the domain of {function}: {detail}")]
    Domain {
        function: &'static str,
        detail: String,
    },

    /// A bottom-parameter Pochhammer symbol vanished before the series terminated.
    #[error("hypergeometric series has a pole at term {term_index}")]
    Pole { term_index: usize },

    #[error("hypergeometric series does not terminate (no non-positive integer top parameter)")]
    NotTerminating,

    #[error("dimension mismatch: expected {expected} complex coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("evaluation point ({x}, {y}) is {distance} from the grid boundary; at least {margin} required")]
    BoundaryMargin {
        x: f64,
        y: f64,
        distance: f64,
        margin: f64,
    },

    #[error("quadrature did not converge: {0}")]
    QuadratureNotConverged(String),

    #[error("requested accuracy not available: {0}")]
    AccuracyRange(String),

    #[error("malformed grid: {0}")]
    MalformedGrid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        function,
        detail: detail.into(),
    }
}
