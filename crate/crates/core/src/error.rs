use thiserror::Error;

/// Errors produced by the geometry layer, the diagram builders and the harness.
#[derive(Debug, Error)]
pub enum GenvorError {
    #[error("sites {0} and {1} have coincident positions")]
    CoincidentSites(usize, usize),
    #[error("duplicate site position shared by ids {0} and {1}")]
    DuplicateSites(usize, usize),
    #[error("site {0} has no visibility constraint")]
    MissingConstraint(usize),
    #[error("site {0} has a non-positive weight")]
    NonpositiveWeight(usize),
    #[error("k = {k} is outside [1, {n}]")]
    KOutOfRange { k: usize, n: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("site {0} coincides with the stretch center")]
    SiteAtSigma(usize),
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
    #[error("builder capacity exceeded: n = {n}, limit = {limit}")]
    BuilderCapacityExceeded { n: usize, limit: usize },
    #[error("cannot parse {0:?} as a rational number")]
    ParseRational(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, GenvorError>;
