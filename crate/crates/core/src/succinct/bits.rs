//! Plain fixed-length bit arrays and fixed-width packed integers.

use alloc::vec;
use alloc::vec::Vec;

pub(crate) const WORD: usize = 64;

/// Number of bits needed to write every value in `0..=max`.
#[inline]
pub fn bits_for(max: u64) -> u32 {
    (u64::BITS - max.leading_zeros()).max(1)
}

/// `⌈log2 n⌉`, with `ceil_log2(0) = ceil_log2(1) = 0`.
#[inline]
pub fn ceil_log2(n: u64) -> u32 {
    if n <= 1 {
        0
    } else {
        u64::BITS - (n - 1).leading_zeros()
    }
}

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

#[inline]
fn low_mask(width: u32) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// A fixed-length sequence of bits backed by 64-bit words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; words_for(len)],
            len,
        }
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for b in bits {
            if len % WORD == 0 {
                words.push(0);
            }
            if b {
                *words.last_mut().unwrap() |= 1 << (len % WORD);
            }
            len += 1;
        }
        Self { words, len }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let w = &mut self.words[i / WORD];
        if value {
            *w |= 1 << (i % WORD);
        } else {
            *w &= !(1 << (i % WORD));
        }
    }

    /// Reads `width ≤ 64` bits starting at bit `pos`, least significant first.
    #[inline]
    pub fn get_bits(&self, pos: usize, width: u32) -> u64 {
        if width == 0 {
            return 0;
        }
        debug_assert!(pos + width as usize <= self.len);
        let (wi, off) = (pos / WORD, (pos % WORD) as u32);
        let lo = self.words[wi] >> off;
        let value = if off + width > 64 {
            lo | self.words[wi + 1] << (64 - off)
        } else {
            lo
        };
        value & low_mask(width)
    }

    #[inline]
    pub fn set_bits(&mut self, pos: usize, width: u32, value: u64) {
        if width == 0 {
            return;
        }
        debug_assert!(pos + width as usize <= self.len);
        debug_assert!(value <= low_mask(width));
        let (wi, off) = (pos / WORD, (pos % WORD) as u32);
        let mask = low_mask(width);
        self.words[wi] = (self.words[wi] & !(mask << off)) | (value << off);
        if off + width > 64 {
            let spill = off + width - 64;
            let hi_mask = low_mask(spill);
            self.words[wi + 1] = (self.words[wi + 1] & !hi_mask) | (value >> (64 - off));
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Heap footprint in bits.
    pub fn bits(&self) -> u64 {
        (self.words.capacity() * WORD) as u64
    }
}

/// Fixed-width unsigned integers packed back to back.
#[derive(Clone, Debug, Default)]
pub struct IntVector {
    raw: BitVec,
    width: u32,
    len: usize,
}

impl IntVector {
    pub fn new(len: usize, width: u32) -> Self {
        assert!(width <= 64);
        Self {
            raw: BitVec::zeros(len * width as usize),
            width,
            len,
        }
    }

    /// An all-zero vector wide enough to hold values up to `max`.
    pub fn for_max(len: usize, max: u64) -> Self {
        Self::new(len, bits_for(max))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn width(&self) -> u32 {
        self.width
    }

    #[inline]
    pub fn get(&self, i: usize) -> u64 {
        debug_assert!(i < self.len);
        self.raw.get_bits(i * self.width as usize, self.width)
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: u64) {
        debug_assert!(i < self.len);
        self.raw.set_bits(i * self.width as usize, self.width, value);
    }

    pub fn bits(&self) -> u64 {
        self.raw.bits()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_helpers() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(5), 3);
        assert_eq!(ceil_log2(8), 3);
        assert_eq!(bits_for(0), 1);
        assert_eq!(bits_for(1), 1);
        assert_eq!(bits_for(2), 2);
        assert_eq!(bits_for(255), 8);
        assert_eq!(bits_for(256), 9);
    }

    #[test]
    fn straddling_fields() {
        let mut b = BitVec::zeros(200);
        b.set_bits(60, 10, 0b11_0110_1011);
        assert_eq!(b.get_bits(60, 10), 0b11_0110_1011);
        b.set_bits(62, 3, 0);
        assert_eq!(b.get_bits(60, 10), 0b11_0110_0011);
        b.set_bits(100, 64, u64::MAX - 5);
        assert_eq!(b.get_bits(100, 64), u64::MAX - 5);
        assert_eq!(b.get_bits(60, 10), 0b11_0110_0011);
    }

    #[test]
    fn int_vector_roundtrip() {
        let mut v = IntVector::new(100, 7);
        for i in 0..100 {
            v.set(i, (i as u64 * 37) % 128);
        }
        for i in 0..100 {
            assert_eq!(v.get(i), (i as u64 * 37) % 128);
        }
    }
}
