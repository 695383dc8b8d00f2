//! Depth arrays for the vertices of one hue.
//!
//! The vertices of hue `h` are ranked by id: the id space is cut into
//! blocks of `w = ⌈(log2 n)/2⌉` vertices, each block keeps its occupancy
//! pattern (bit set iff the vertex has hue `h`), a prefix array `B` gives
//! the rank of each block's first member, and a shared table maps
//! `(pattern, offset)` to the number of members before the offset.

use crate::succinct::{bits_for, BitVec, IntVector};

/// `(pattern, j) → popcount(pattern & (2^j - 1))` for `w`-bit patterns.
#[derive(Clone, Debug)]
pub(crate) struct OffsetTable {
    w: usize,
    counts: IntVector,
}

impl OffsetTable {
    pub fn new(w: usize) -> Self {
        let mut counts = IntVector::for_max((1 << w) * w, w as u64);
        for p in 0..(1usize << w) {
            for j in 0..w {
                counts.set(p * w + j, (p & ((1 << j) - 1)).count_ones() as u64);
            }
        }
        Self { w, counts }
    }

    #[inline]
    fn get(&self, pattern: usize, j: usize) -> usize {
        self.counts.get(pattern * self.w + j) as usize
    }

    pub fn bits(&self) -> u64 {
        self.counts.bits()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct DepthMap {
    pub hue: usize,
    pub last_use: u64,
    w: usize,
    pattern: BitVec,
    prefix: IntVector,
    depths: IntVector,
}

impl DepthMap {
    /// Scans the hue table once; depths start at zero.
    pub fn build(hue: usize, hues: &IntVector, w: usize, members_max: usize, depth_max: usize) -> Self {
        let n = hues.len();
        let blocks = n.div_ceil(w);
        let mut pattern = BitVec::zeros(n);
        let mut prefix = IntVector::for_max(blocks.max(1), members_max as u64);
        let mut count = 0;
        for b in 0..blocks {
            prefix.set(b, count as u64);
            for v in b * w..((b + 1) * w).min(n) {
                if hues.get(v) as usize == hue {
                    pattern.set(v, true);
                    count += 1;
                }
            }
        }
        Self {
            hue,
            last_use: 0,
            w,
            pattern,
            prefix,
            depths: IntVector::new(count.max(1), bits_for(depth_max as u64)),
        }
    }

    #[inline]
    fn rank(&self, table: &OffsetTable, v: usize) -> usize {
        let b = v / self.w;
        let start = b * self.w;
        let width = self.w.min(self.pattern.len() - start) as u32;
        let p = self.pattern.get_bits(start, width) as usize;
        self.prefix.get(b) as usize + table.get(p, v - start)
    }

    pub fn get(&self, table: &OffsetTable, v: usize) -> usize {
        debug_assert!(self.pattern.get(v));
        self.depths.get(self.rank(table, v)) as usize
    }

    pub fn set(&mut self, table: &OffsetTable, v: usize, depth: usize) {
        debug_assert!(self.pattern.get(v));
        let r = self.rank(table, v);
        self.depths.set(r, depth as u64)
    }

    pub fn bits(&self) -> u64 {
        self.pattern.bits() + self.prefix.bits() + self.depths.bits()
    }
}
