use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A size or cost guard refused the request.
    #[error("{what}: requested {requested}, guard allows at most {limit}")]
    GuardExceeded {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An exact check that a theorem or construction promises can never
    /// fail has failed. Surfacing this is the whole point of the crate.
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
