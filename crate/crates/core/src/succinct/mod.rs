//! Succinct building blocks: bit arrays, rank-select, static space
//! allocation, choice and ragged dictionaries, and the space ledger.

pub mod bits;
pub mod choice;
pub mod ledger;
pub mod ragged;
pub mod rank_select;
pub mod static_alloc;

pub use bits::{bits_for, ceil_log2, BitVec, IntVector};
pub use choice::{ChoiceDictionary, ChoiceDictionaryFamily};
pub use ledger::{SpaceLedger, TagUsage};
pub use ragged::RaggedDictionary;
pub use rank_select::RankSelect;
pub use static_alloc::{RecordArray, StaticAllocationIndex};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SuccinctError {
    #[error("element {element} outside universe of size {universe}")]
    OutOfUniverse { element: usize, universe: usize },
    #[error("dictionary capacity {capacity} exceeded")]
    CapacityExceeded { capacity: usize },
    #[error("satellite value does not fit in {bits} bits")]
    SatelliteTooWide { bits: u32 },
    #[error("release of {requested} bits exceeds live bits for tag {tag:?}")]
    OverRelease { tag: &'static str, requested: u64 },
}
