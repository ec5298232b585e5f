use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The argument lies outside the operation's mathematical domain.
    #[error("{op}: {msg}")]
    Domain { op: &'static str, msg: String },

    /// The argument is mathematically fine but beyond the enumeration
    /// budget of an exponential-cost path.
    #[error("{op}: {msg}")]
    Capacity { op: &'static str, msg: String },

    /// Degrees whose intersection cannot cut out a finite set of lines
    /// in any ambient projective space.
    #[error(
        "degrees {degrees:?}: sum of (d_i + 1) is {sum}, which is odd, \
         so no ambient dimension matches"
    )]
    DimensionMismatch { degrees: Vec<usize>, sum: usize },

    /// An exact identity the implementation relies on failed to hold.
    /// Seeing this means a bug, not bad input.
    #[error("internal defect in {op}: {msg}")]
    Defect { op: &'static str, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Domain { op, msg: msg.into() }
    }

    pub(crate) fn capacity(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Capacity { op, msg: msg.into() }
    }

    pub(crate) fn defect(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Defect { op, msg: msg.into() }
    }
}
