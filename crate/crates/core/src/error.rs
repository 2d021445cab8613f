use thiserror::Error;

/// Error taxonomy shared by every module.
///
/// `Config` rejects invalid family/rank/parameter combinations, `Usage`
/// flags caller mistakes (dimension mismatch, wrong family for an
/// operation), `Structural` signals that an internal algebraic invariant
/// failed to hold, and `Numeric` covers floating-point breakdowns.
#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("numeric error: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// CLI exit code: configuration/usage/structural/numeric all map to 2.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
