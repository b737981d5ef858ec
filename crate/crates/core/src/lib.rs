//! Total forcing sets in graphs: propagation engines, exact solvers,
//! constructive bounds with certificates, and the ZF-to-TF reduction gadget.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats on disk and the
//! CLI live in the companion `total-forcing-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod construct;
pub mod error;
pub mod families;
pub mod forcing;
pub mod gadget;
pub mod graph;
pub mod graph6;
pub mod packing;
pub mod solve;
pub mod vset;

pub use error::{ConstructError, GadgetError, Graph6Error, GraphError, SolveError};
pub use forcing::{classify_set, forcing_closure, forcing_closure_with_priority, ForcingChronology, PowerTrace, SetClass};
pub use graph::Graph;
pub use solve::{DominationVariant, ForcingVariant, PackingTiebreak, SolveResult, SolverLimits};
pub use vset::VertexSet;
