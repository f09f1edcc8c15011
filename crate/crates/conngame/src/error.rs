use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Why the engine refused a move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveRejection {
    /// The vertex was already played.
    Occupied,
    /// Connected play requires the vertex to touch the played set.
    Disconnected,
    /// The color already appears on a neighbor.
    ColorConflict,
    /// Vertex index out of range.
    UnknownVertex,
    /// Color outside `1..=t`, or a color supplied in a marking game (and vice versa).
    BadColor,
    /// Passing is only meaningful in the restricted pattern game.
    PassNotAllowed,
}

impl std::fmt::Display for MoveRejection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            MoveRejection::Occupied => "occupied",
            MoveRejection::Disconnected => "disconnected",
            MoveRejection::ColorConflict => "color conflict",
            MoveRejection::UnknownVertex => "unknown vertex",
            MoveRejection::BadColor => "bad color",
            MoveRejection::PassNotAllowed => "pass not allowed",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Domain(String),

    #[error("illegal move {mv}: {reason}")]
    IllegalMove { mv: String, reason: MoveRejection },

    #[error("resource limit exceeded: {cap} = {limit}")]
    ResourceLimit { cap: &'static str, limit: u64 },

    #[error("strategy contract violated: {0}")]
    Contract(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
