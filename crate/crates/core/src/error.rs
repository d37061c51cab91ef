//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Dimension contract violated; names both offending shapes.
    #[error("shape mismatch in {op}: {lhs} vs {rhs}")]
    ShapeMismatch {
        op: &'static str,
        lhs: String,
        rhs: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Train-mode batch statistics are undefined on fewer than 2 frames.
    #[error("batch norm train mode needs at least 2 valid frames, got {0}")]
    BatchNormTooFewFrames(usize),

    #[error("non-finite value in {0}")]
    NonFinite(String),

    /// Non-finite gradient; Adam fails fast and names the parameter.
    #[error("non-finite gradient for parameter {0}")]
    NonFiniteGradient(String),

    /// CTC target cannot be aligned within the available frames.
    #[error("ctc target for sequence {index} needs at least {needed} frames, got {got}")]
    CtcInfeasible {
        index: usize,
        needed: usize,
        got: usize,
    },

    #[error("target id {id} out of range (alphabet size {alphabet})")]
    TargetOutOfRange { id: usize, alphabet: usize },

    #[error("label {0} not covered by the label map")]
    UnmappedLabel(usize),

    /// Step-level failure annotated with its timestep.
    #[error("at timestep {t}: {source}")]
    AtTimestep {
        t: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("config validation failed:\n{}", .0.join("\n"))]
    ConfigValidation(Vec<String>),

    #[error("bad magic in {path}: expected {expected:?}")]
    BadMagic { path: String, expected: String },

    #[error("unsupported format version {version} in {path}")]
    BadVersion { path: String, version: u32 },

    #[error("truncated file {path} at byte offset {offset}")]
    Truncated { path: String, offset: u64 },

    #[error("feature dimension mismatch in {path}: archive declares {expected}, sequence {id} has {found}")]
    ArchiveDimMismatch {
        path: String,
        id: String,
        expected: usize,
        found: usize,
    },

    #[error("non-finite feature value in sequence {id} of {path}")]
    ArchiveNonFinite { path: String, id: String },

    #[error("parse error in {path} line {line}: {msg}")]
    ParseError {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("{0}")]
    Checkpoint(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn at_timestep(self, t: usize) -> Self {
        Error::AtTimestep {
            t,
            source: Box::new(self),
        }
    }
}
