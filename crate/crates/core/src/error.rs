//! Error types shared across the crate.

use alloc::string::String;
use core::fmt;

use crate::forcing::ForcingChronology;

/// Structural errors: invalid vertex ids or family parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    BadParameter { what: &'static str },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex id {vertex} out of range for graph on {n} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::BadParameter { what } => write!(f, "bad parameter: {what}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// graph6 decoding errors, carrying the byte offset of the offending byte.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    BadHeader { offset: usize },
    InvalidByte { offset: usize, byte: u8 },
    Truncated { offset: usize, needed: usize },
    TrailingGarbage { offset: usize },
    NonzeroPadding { offset: usize },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::BadHeader { offset } => write!(f, "malformed graph6 size header at byte {offset}"),
            Graph6Error::InvalidByte { offset, byte } => {
                write!(f, "byte {byte:#04x} at offset {offset} outside graph6 range 63..=126")
            }
            Graph6Error::Truncated { offset, needed } => {
                write!(f, "truncated graph6 bit field at byte {offset}: {needed} more byte(s) expected")
            }
            Graph6Error::TrailingGarbage { offset } => write!(f, "trailing garbage from byte {offset}"),
            Graph6Error::NonzeroPadding { offset } => write!(f, "nonzero padding bits in final byte {offset}"),
        }
    }
}

impl core::error::Error for Graph6Error {}

/// Exact-solver failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    /// No set of any cardinality satisfies the variant's predicate.
    Infeasible { what: &'static str },
    /// The graph exceeds the subset-enumeration guard.
    GuardExceeded { n: usize, limit: usize },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::Infeasible { what } => write!(f, "no feasible set exists: {what}"),
            SolveError::GuardExceeded { n, limit } => {
                write!(f, "graph order {n} exceeds subset-search guard {limit} (override to raise)")
            }
        }
    }
}

impl core::error::Error for SolveError {}

/// Failures of the constructive builders.
#[derive(Debug, Clone)]
pub enum ConstructError {
    Precondition(String),
    /// The built set failed its own certification (closure or bound check).
    CertificationFailed { stage: String },
    /// The literal packing pipeline could not complete; carries the partial
    /// decomposition for diagnosis.
    PipelineFailed {
        stage: String,
        decomposition: alloc::boxed::Box<crate::packing::PackingDecomposition>,
    },
    Solve(SolveError),
    Graph(GraphError),
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            ConstructError::CertificationFailed { stage } => {
                write!(f, "constructed set failed certification at stage: {stage}")
            }
            ConstructError::PipelineFailed { stage, .. } => {
                write!(f, "packing pipeline failed at stage: {stage}")
            }
            ConstructError::Solve(e) => write!(f, "{e}"),
            ConstructError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ConstructError {}

impl From<SolveError> for ConstructError {
    fn from(e: SolveError) -> Self {
        ConstructError::Solve(e)
    }
}

impl From<GraphError> for ConstructError {
    fn from(e: GraphError) -> Self {
        ConstructError::Graph(e)
    }
}

/// Failures of the ZF-to-TF gadget lift/project maps.
#[derive(Debug, Clone)]
pub enum GadgetError {
    NotForcingInBase,
    NotTotalForcingInGadget,
    /// The projected set is not a forcing set of the base graph; carries the
    /// stuck closure as evidence.
    ProjectionNotForcing(ForcingChronology),
    MissingGadgetVertices,
}

impl fmt::Display for GadgetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetError::NotForcingInBase => write!(f, "set is not a forcing set of the base graph"),
            GadgetError::NotTotalForcingInGadget => {
                write!(f, "lifted set is not a total forcing set of the gadget")
            }
            GadgetError::ProjectionNotForcing(c) => write!(
                f,
                "projected set is not a forcing set of the base ({} of {} vertices colored)",
                c.final_set.len(),
                c.final_set.capacity()
            ),
            GadgetError::MissingGadgetVertices => {
                write!(f, "TF-set is missing required path-center or leaf vertices")
            }
        }
    }
}

impl core::error::Error for GadgetError {}
