//! Space-frugal graph algorithms on a read-only adjacency-array graph.
//!
//! The crate is `no_std` (it needs `alloc`). Every algorithm reports the
//! working bits it allocates to a [`SpaceLedger`](succinct::SpaceLedger);
//! the input graph itself is not counted.

#![no_std]

extern crate alloc;

pub mod bicc;
pub mod cutvertex;
pub mod graph;
pub mod oracle;
pub mod outerplanar;
pub mod succinct;

pub use graph::{EdgeRef, Graph, GraphError};
pub use succinct::SpaceLedger;
