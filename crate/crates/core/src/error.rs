use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: char, right: char },

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("budget exceeded: {what} needs {required}, cap is {cap}")]
    BudgetExceeded {
        what: &'static str,
        required: String,
        cap: String,
    },

    /// A structural identity that the oracle checks at runtime did not hold.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn check_degrees(left: usize, right: usize) -> Result<()> {
        if left == right {
            Ok(())
        } else {
            Err(Error::DegreeMismatch { left, right })
        }
    }
}
