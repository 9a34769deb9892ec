//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide error enumeration.
///
/// Numeric routines report the offending evaluation point wherever one
/// exists, because almost every failure here is a domain violation of a
/// user-supplied profile rather than a programming error.
#[derive(Debug, Error)]
pub enum Error {
    /// Expression source failed to parse; `offset` is 1-based, with
    /// end-of-input reported at `len + 1`.
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// An elementary operation left its domain (ln/sqrt of a non-positive
    /// value, division by zero, ...) during jet evaluation.
    #[error("domain error at x = {x}: {message}")]
    Domain { x: f64, message: String },

    /// A beam-spec document was structurally invalid.
    #[error("beam spec error: {0}")]
    BeamSpec(String),

    /// A profile violated positivity at a probe node.
    #[error("positivity violation: {quantity} = {value} at x = {x}")]
    Positivity {
        quantity: &'static str,
        value: f64,
        x: f64,
    },

    /// A transformation or solver was asked for parameters outside its
    /// admissible set.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// Classification prerequisite failed (e.g. iso-spectral check on a
    /// profile that is not in the maximal class).
    #[error("class mismatch: {0}")]
    ClassMismatch(String),

    /// Iterative numerics failed to converge within the iteration cap.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// Filesystem-level problem, annotated with the path.
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn domain(x: f64, message: impl Into<String>) -> Self {
        Error::Domain {
            x,
            message: message.into(),
        }
    }
}

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
