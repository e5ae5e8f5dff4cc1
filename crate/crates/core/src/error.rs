use alloc::string::String;
use core::fmt;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge endpoint is not in `0..n`.
    OutOfRangeVertex { vertex: usize, order: usize },
    /// An edge joins a vertex to itself.
    SelfLoop { vertex: usize },
    /// Malformed edge-list text; `line` is 1-based.
    Syntax { line: usize, reason: String },
    /// The operation is only defined for connected graphs.
    DisconnectedGraph,
    /// No feasible set satisfies the given include/exclude constraints.
    Infeasible,
    /// The instance exceeds a documented size cap of the operation.
    TooLarge { order: usize, limit: usize },
    /// A parameter is outside the domain of the requested family or suite.
    BadParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutOfRangeVertex { vertex, order } => {
                write!(f, "vertex {vertex} out of range for graph of order {order}")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::Syntax { line, reason } => write!(f, "line {line}: {reason}"),
            Error::DisconnectedGraph => write!(f, "graph is not connected"),
            Error::Infeasible => write!(f, "constraints admit no feasible set"),
            Error::TooLarge { order, limit } => {
                write!(f, "graph of order {order} exceeds the cap of {limit} for this operation")
            }
            Error::BadParameter(reason) => write!(f, "bad parameter: {reason}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
