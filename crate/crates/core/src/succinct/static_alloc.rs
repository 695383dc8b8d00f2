//! Static space allocation: variable-width records laid out back to back
//! in one bit array and located in O(1) through a select query.

use super::bits::BitVec;
use super::rank_select::RankSelect;

/// Locates records `A_1 .. A_n` of sizes `d_1 .. d_n` inside an `N`-bit array.
///
/// The marker vector has length `n + N` with a one at `s_k = k + Σ_{j<k} d_j`,
/// so the bit offset of `A_k` is `select(k) − k`.
#[derive(Clone, Debug)]
pub struct StaticAllocationIndex {
    marker: RankSelect,
    records: usize,
    total: usize,
}

impl StaticAllocationIndex {
    pub fn new<I>(sizes: I) -> Self
    where
        I: IntoIterator<Item = usize>,
        I::IntoIter: Clone,
    {
        let sizes = sizes.into_iter();
        let records = sizes.clone().count();
        let total: usize = sizes.clone().sum();
        let mut marker = BitVec::zeros(records + total);
        let mut s = 0; // 0-based s_k - 1
        for d in sizes {
            marker.set(s, true);
            s += d + 1;
        }
        Self {
            marker: RankSelect::new(marker),
            records,
            total,
        }
    }

    /// Number of records `n`.
    #[inline]
    pub fn records(&self) -> usize {
        self.records
    }

    /// Total payload bits `N`.
    #[inline]
    pub fn total(&self) -> usize {
        self.total
    }

    /// Bit offset of record `A_k`, `1 ≤ k ≤ n`.
    pub fn locate(&self, k: usize) -> Option<usize> {
        (1..=self.records)
            .contains(&k)
            .then(|| self.marker.select_unchecked(k) - k)
    }

    /// Bit offset of the 0-based record `i`; `start(n) = N`.
    #[inline]
    pub fn start(&self, i: usize) -> usize {
        if i == self.records {
            self.total
        } else {
            self.marker.select_unchecked(i + 1) - (i + 1)
        }
    }

    /// Width `d` of the 0-based record `i`.
    #[inline]
    pub fn width(&self, i: usize) -> usize {
        self.start(i + 1) - self.start(i)
    }

    pub fn marker(&self) -> &RankSelect {
        &self.marker
    }

    pub fn bits(&self) -> u64 {
        self.marker.bits()
    }
}

/// Variable-width per-item records stored with static space allocation.
#[derive(Clone, Debug)]
pub struct RecordArray {
    index: StaticAllocationIndex,
    data: BitVec,
}

impl RecordArray {
    pub fn new<I>(sizes: I) -> Self
    where
        I: IntoIterator<Item = usize>,
        I::IntoIter: Clone,
    {
        let index = StaticAllocationIndex::new(sizes);
        let data = BitVec::zeros(index.total());
        Self { index, data }
    }

    #[inline]
    pub fn index(&self) -> &StaticAllocationIndex {
        &self.index
    }

    /// Start bit of record `i` (0-based).
    #[inline]
    pub fn start(&self, i: usize) -> usize {
        self.index.start(i)
    }

    #[inline]
    pub fn get(&self, pos: usize, width: u32) -> u64 {
        self.data.get_bits(pos, width)
    }

    #[inline]
    pub fn set(&mut self, pos: usize, width: u32, value: u64) {
        self.data.set_bits(pos, width, value)
    }

    pub fn bits(&self) -> u64 {
        self.index.bits() + self.data.bits()
    }
}
