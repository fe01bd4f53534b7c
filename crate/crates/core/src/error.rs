use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the algebraic core. All of them describe bad input; an
/// internal invariant violation panics instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex index is outside `0..num_vertices`.
    VertexOutOfRange { vertex: usize, num_vertices: usize },
    /// A vertex has no incident dart.
    IsolatedVertex(usize),
    /// Cyclic data does not list exactly the darts of a vertex.
    CyclicMismatch { vertex: usize, reason: String },
    /// A vertex has the wrong valence for the requested operation.
    Valence { vertex: usize, expected: String, found: usize },
    /// The operation requires an even vertex count.
    OddVertexCount(usize),
    /// A parameter is outside the supported desk-scale range.
    OutOfRange(String),
    /// Two lengths that must agree do not.
    LengthMismatch { expected: usize, found: usize },
    /// The edge is a tadpole where a non-loop edge is required.
    TadpoleEdge(usize),
    /// An edge index is out of range.
    EdgeOutOfRange { edge: usize, num_edges: usize },
    /// A polynomial argument is not in the required graded piece.
    Degree(String),
    /// An algebra failed validation; the string names the failed check.
    InvalidAlgebra(String),
    /// Orientation and cyclic data attached to the same term disagree.
    InconsistentOrientation,
    /// Generic malformed input.
    Malformed(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, num_vertices } => {
                write!(f, "vertex index {vertex} out of range (graph has {num_vertices} vertices)")
            }
            Error::IsolatedVertex(v) => write!(f, "vertex {v} has no incident edge"),
            Error::CyclicMismatch { vertex, reason } => {
                write!(f, "cyclic order at vertex {vertex}: {reason}")
            }
            Error::Valence { vertex, expected, found } => {
                write!(f, "vertex {vertex} has valence {found}, expected {expected}")
            }
            Error::OddVertexCount(n) => write!(f, "vertex count {n} is odd"),
            Error::OutOfRange(s) => write!(f, "parameter out of supported range: {s}"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::TadpoleEdge(e) => write!(f, "edge {e} is a tadpole"),
            Error::EdgeOutOfRange { edge, num_edges } => {
                write!(f, "edge index {edge} out of range (graph has {num_edges} edges)")
            }
            Error::Degree(s) => write!(f, "degree violation: {s}"),
            Error::InvalidAlgebra(s) => write!(f, "algebra failed validation: {s}"),
            Error::InconsistentOrientation => {
                write!(f, "cyclic data does not induce the attached orientation")
            }
            Error::Malformed(s) => write!(f, "malformed input: {s}"),
        }
    }
}

impl core::error::Error for Error {}
