//! Error type shared across the crate.

use crate::codec::TransformState;

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A segment with coincident endpoints where positive length is required.
    #[error("zero-length line segment{}", index_suffix(*.0))]
    DegenerateSegment(Option<usize>),

    /// An operation that needs at least one segment got an empty map.
    #[error("segment map is empty")]
    EmptyMap,

    /// An attraction field arrived in the wrong transform state.
    #[error("attraction field is {found:?}, expected {expected:?}")]
    WrongState {
        expected: TransformState,
        found: TransformState,
    },

    /// Lattice too small for the requested operation.
    #[error("lattice {0}x{1} is too small (need at least {2}x{3})")]
    LatticeTooSmall(u32, u32, u32, u32),

    /// Two maps that must share a lattice do not.
    #[error("lattice mismatch: {0}x{1} vs {2}x{3}")]
    LatticeMismatch(u32, u32, u32, u32),

    /// A scalar argument outside its documented domain.
    #[error("{0}")]
    Domain(String),

    /// Invalid synthetic-map configuration.
    #[error("invalid synthesis config: {0}")]
    Config(String),

    /// Per-segment validation failure, naming the offending index.
    #[error("segment {index}: {reason}")]
    InvalidSegment { index: usize, reason: String },

    /// Structural problem in a binary or JSON file, with the byte offset
    /// at which it was detected.
    #[error("{reason} (byte offset {offset})")]
    Format { offset: u64, reason: String },

    #[error("malformed segment JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn format(offset: u64, reason: impl Into<String>) -> Self {
        Error::Format {
            offset,
            reason: reason.into(),
        }
    }
}

fn index_suffix(index: Option<usize>) -> String {
    match index {
        Some(i) => format!(" at index {i}"),
        None => String::new(),
    }
}
