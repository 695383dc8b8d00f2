//! Constant-time rank and select over a static bit sequence.
//!
//! Rank uses a two-level directory: one absolute count per 512-bit
//! superblock and seven 9-bit relative counts packed into one word.
//! Select uses a sampled inventory: every 1024th one-bit is recorded; a
//! block of 1024 ones spanning at least 2^16 bit positions stores all of
//! its positions explicitly, otherwise every 32nd one is recorded as a
//! 16-bit offset and the remaining distance is covered by a bounded scan.
//! Both directories take O(n) bits and are built in one pass.

use alloc::vec::Vec;

use super::bits::{BitVec, WORD};

const SUPER: usize = 512;
const WORDS_PER_SUPER: usize = SUPER / WORD;
const ONES_PER_BLOCK: usize = 1024;
const SUB_STRIDE: usize = 32;
const SUBS_PER_BLOCK: usize = ONES_PER_BLOCK / SUB_STRIDE;
const SPARSE_SPAN: u64 = 1 << 16;
const SPARSE_FLAG: u64 = 1 << 63;

/// A bit sequence `b_1 .. b_n` with O(1) `rank` and `select`.
#[derive(Clone, Debug)]
pub struct RankSelect {
    bits: BitVec,
    ones: usize,
    /// Pairs (absolute count before superblock, packed 9-bit relative counts).
    counts: Vec<u64>,
    /// Per block of 1024 ones: position of its first one, or a flagged index
    /// into `sparse` when the block is stored explicitly.
    inventory: Vec<u64>,
    subsamples: Vec<u16>,
    sparse: Vec<u64>,
}

impl RankSelect {
    pub fn new(bits: BitVec) -> Self {
        let words = bits.words();
        let n_super = bits.len() / SUPER + 1;
        let mut counts = Vec::with_capacity(2 * n_super);
        let mut total = 0u64;
        for s in 0..n_super {
            counts.push(total);
            let mut packed = 0u64;
            let mut within = 0u64;
            for w in 0..WORDS_PER_SUPER {
                if w > 0 {
                    packed |= within << (9 * (w - 1));
                }
                if let Some(word) = words.get(s * WORDS_PER_SUPER + w) {
                    within += word.count_ones() as u64;
                }
            }
            counts.push(packed);
            total += within;
        }
        let ones = total as usize;

        let mut positions = Vec::with_capacity(ONES_PER_BLOCK);
        let mut inventory = Vec::with_capacity(ones.div_ceil(ONES_PER_BLOCK));
        let mut subsamples = Vec::new();
        let mut sparse = Vec::new();
        let mut flush = |positions: &mut Vec<u64>| {
            if positions.is_empty() {
                return;
            }
            let first = positions[0];
            let last = *positions.last().unwrap();
            if last - first >= SPARSE_SPAN {
                inventory.push(SPARSE_FLAG | sparse.len() as u64);
                sparse.extend_from_slice(positions);
                subsamples.extend(core::iter::repeat(0).take(SUBS_PER_BLOCK));
            } else {
                inventory.push(first);
                for i in 0..SUBS_PER_BLOCK {
                    let off = positions.get(i * SUB_STRIDE).map_or(0, |p| p - first);
                    subsamples.push(off as u16);
                }
            }
            positions.clear();
        };
        for (wi, &word) in words.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let t = w.trailing_zeros() as u64;
                positions.push(wi as u64 * WORD as u64 + t);
                if positions.len() == ONES_PER_BLOCK {
                    flush(&mut positions);
                }
                w &= w - 1;
            }
        }
        flush(&mut positions);

        Self {
            bits,
            ones,
            counts,
            inventory,
            subsamples,
            sparse,
        }
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        Self::new(BitVec::from_bools(bits))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    #[inline]
    pub fn count_ones(&self) -> usize {
        self.ones
    }

    /// `b_i` for `1 ≤ i ≤ n`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.bits.get(i - 1)
    }

    pub fn bit_vec(&self) -> &BitVec {
        &self.bits
    }

    /// `Σ_{i ≤ j} b_i`, or `None` if `j > n`.
    pub fn rank(&self, j: usize) -> Option<usize> {
        (j <= self.len()).then(|| self.rank_unchecked(j))
    }

    /// Smallest `j` with `rank(j) = k`, or `None` unless `1 ≤ k ≤ ones`.
    pub fn select(&self, k: usize) -> Option<usize> {
        (1..=self.ones)
            .contains(&k)
            .then(|| self.select_unchecked(k))
    }

    /// Number of one-bits among the first `j` bits. Requires `j ≤ n`.
    #[inline]
    pub fn rank_unchecked(&self, j: usize) -> usize {
        let s = j / SUPER;
        let w = (j / WORD) % WORDS_PER_SUPER;
        let mut r = self.counts[2 * s];
        if w > 0 {
            r += self.counts[2 * s + 1] >> (9 * (w - 1)) & 0x1ff;
        }
        let rem = j % WORD;
        if rem > 0 {
            let word = self.bits.words()[j / WORD];
            r += (word & ((1u64 << rem) - 1)).count_ones() as u64;
        }
        r as usize
    }

    /// 1-based position of the `k`-th one-bit. Requires `1 ≤ k ≤ ones`.
    #[inline]
    pub fn select_unchecked(&self, k: usize) -> usize {
        self.position_of(k - 1) as usize + 1
    }

    /// 0-based position of the one-bit with 0-based index `k`.
    fn position_of(&self, k: usize) -> u64 {
        let block = k / ONES_PER_BLOCK;
        let inv = self.inventory[block];
        let in_block = k % ONES_PER_BLOCK;
        if inv & SPARSE_FLAG != 0 {
            return self.sparse[(inv & !SPARSE_FLAG) as usize + in_block];
        }
        let sub = in_block / SUB_STRIDE;
        let start = inv + self.subsamples[block * SUBS_PER_BLOCK + sub] as u64;
        // The sampled one is itself index `block*1024 + sub*32`; skip forward.
        let mut remaining = (in_block % SUB_STRIDE) as u32;
        let words = self.bits.words();
        let mut wi = (start / WORD as u64) as usize;
        let mut w = words[wi] & (u64::MAX << (start % WORD as u64));
        loop {
            let c = w.count_ones();
            if remaining < c {
                return wi as u64 * WORD as u64 + select_in_word(w, remaining) as u64;
            }
            remaining -= c;
            wi += 1;
            w = words[wi];
        }
    }

    /// Heap footprint in bits, including the underlying sequence.
    pub fn bits(&self) -> u64 {
        self.bits.bits()
            + (self.counts.capacity()
                + self.inventory.capacity()
                + self.sparse.capacity()) as u64
                * 64
            + self.subsamples.capacity() as u64 * 16
    }
}

/// Position of the `r`-th (0-based) one-bit inside `w`.
#[inline]
pub(crate) fn select_in_word(mut w: u64, r: u32) -> u32 {
    for _ in 0..r {
        w &= w - 1;
    }
    w.trailing_zeros()
}
