//! Reference implementations with no space limits, plus graph generators.
//!
//! Nothing here reports to a ledger. The code favours being obviously
//! right over being fast.

mod connectivity;
mod generators;
mod outerplanar;
mod paths;

pub use connectivity::{
    lowpoint_cut_vertices, oracle_bcc, oracle_cut_vertices, oracle_marks, MutableGraph,
};
pub use generators::{gen_connected, gen_gnm, gen_mop, labeled_graphs, permute, GenError};
pub use outerplanar::{hamiltonian_witness, oracle_outerplanar};
pub use paths::{disjoint_paths, enumerate_disjoint_paths};
