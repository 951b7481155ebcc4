use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point outside the domain: {0}")]
    Domain(String),
    #[error("map has a critical point (f' = 0) at z = {0}")]
    CriticalPoint(String),
    #[error("envelope system degenerate at z = {0}")]
    EnvelopeDegenerate(String),
    #[error("surface not immersed: ||Sf(z)|| = {0} gives an infinite principal curvature")]
    NotImmersed(f64),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{what} did not converge (best value so far {best})")]
    NonConvergence { what: String, best: f64 },
    #[error("evaluation produced a non-finite value: {0}")]
    NonFinite(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
