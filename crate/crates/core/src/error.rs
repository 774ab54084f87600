use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vector does not have norm 3 (norm = {0})")]
    NormNotThree(String),
    #[error("torus coordinate is zero")]
    ZeroTorusCoordinate,
    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(String),
    #[error("vector is not a norm-one root")]
    NotARoot,
    #[error("Fano index {0} is not in 1..=7")]
    BadIndex(usize),
    #[error("triple realization failed (residual {residual:e}): {reason}")]
    RealizationFailed { residual: f64, reason: String },
    #[error("braid orbit exceeded {0} states")]
    OrbitTruncated(usize),
    #[error("group closure exceeded {0} elements")]
    ClosureTruncated(usize),
    #[error("no braid dictionary word found for {0}")]
    DictionaryNotFound(String),
    #[error("matrix entries are not quarter-integers")]
    NotQuarterIntegral,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}
