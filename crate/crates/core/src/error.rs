use alloc::string::String;
use core::fmt;

/// Broad classification used by front ends to pick exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// The caller handed in something malformed or out of range.
    Input,
    /// The request is well formed but exceeds a declared size cap.
    Capability,
    /// An invariant that should always hold was violated.
    Internal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
    NotAnEdge(usize, usize),
    /// The forbidden graph has no edges, so no graph is saturated for it.
    EdgelessForbidden,
    /// The host graph is smaller than the forbidden graph.
    HostTooSmall {
        host: usize,
        forbidden: usize,
    },
    InvalidParameter(String),
    OverCap {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    Internal(&'static str),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::OverCap { .. } => ErrorKind::Capability,
            Error::Internal(_) => ErrorKind::Internal,
            _ => ErrorKind::Input,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::DuplicateEdge(u, v) => write!(f, "duplicate edge {u}-{v}"),
            Error::NotAnEdge(u, v) => write!(f, "{u}-{v} is not an edge"),
            Error::EdgelessForbidden => {
                write!(f, "forbidden graph has no edges; its saturation number is infinite")
            }
            Error::HostTooSmall { host, forbidden } => {
                write!(f, "host graph has {host} vertices, fewer than the forbidden graph's {forbidden}")
            }
            Error::InvalidParameter(msg) => f.write_str(msg),
            Error::OverCap { what, n, cap } => {
                write!(f, "{what} supports at most {cap} vertices, got {n}")
            }
            Error::Internal(msg) => write!(f, "internal consistency error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
