//! A stack split into hue segments with at most two segments resident.

use crate::succinct::IntVector;

/// One resident segment: bit-packed `(vertex, value)` entries of one hue.
#[derive(Clone, Debug)]
pub(crate) struct Segment {
    pub hue: usize,
    pub len: usize,
    vert: IntVector,
    val: IntVector,
}

impl Segment {
    pub fn new(capacity: usize, vertex_bits: u32, value_bits: u32) -> Self {
        Self {
            hue: 0,
            len: 0,
            vert: IntVector::new(capacity, vertex_bits),
            val: IntVector::new(capacity, value_bits),
        }
    }

    pub fn reset(&mut self, hue: usize) {
        self.hue = hue;
        self.len = 0;
    }

    pub fn push(&mut self, v: usize, val: usize) {
        self.vert.set(self.len, v as u64);
        self.val.set(self.len, val as u64);
        self.len += 1;
    }

    #[inline]
    pub fn vertex(&self, i: usize) -> usize {
        self.vert.get(i) as usize
    }

    #[inline]
    pub fn value(&self, i: usize) -> usize {
        self.val.get(i) as usize
    }

    pub fn set_value(&mut self, i: usize, val: usize) {
        self.val.set(i, val as u64)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len).map(|i| (self.vertex(i), self.value(i)))
    }

    pub fn bits(&self) -> u64 {
        self.vert.bits() + self.val.bits()
    }
}

/// Stack of `(vertex, value)` entries grouped by non-decreasing hue.
///
/// `present` records every hue with at least one entry. Only the top one
/// or two segments are held; pushing a third hue drops the lowest resident
/// one, and the caller restores a segment when a pop crosses into it.
#[derive(Clone, Debug)]
pub(crate) struct SegStack {
    bufs: [Segment; 2],
    /// Indices into `bufs` of resident segments, bottom first.
    resident: [usize; 2],
    count: usize,
    pub present: u64,
    pub discards: usize,
}

impl SegStack {
    pub fn new(capacity: usize, vertex_bits: u32, value_bits: u32) -> Self {
        let seg = Segment::new(capacity, vertex_bits, value_bits);
        Self {
            bufs: [seg.clone(), seg],
            resident: [0, 1],
            count: 0,
            present: 0,
            discards: 0,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.present == 0
    }

    pub fn max_hue(&self) -> Option<usize> {
        (self.present != 0).then(|| 63 - self.present.leading_zeros() as usize)
    }

    /// Hue whose segment must be restored before the top can be read.
    pub fn missing_top(&self) -> Option<usize> {
        let h = self.max_hue()?;
        (self.count == 0 || self.top_seg().hue != h).then_some(h)
    }

    fn top_seg(&self) -> &Segment {
        &self.bufs[self.resident[self.count - 1]]
    }

    fn top_seg_mut(&mut self) -> &mut Segment {
        &mut self.bufs[self.resident[self.count - 1]]
    }

    pub fn resident(&self, hue: usize) -> Option<&Segment> {
        self.resident[..self.count]
            .iter()
            .map(|&b| &self.bufs[b])
            .find(|s| s.hue == hue)
    }

    /// Top entry; the top segment must be resident.
    pub fn top(&self) -> (usize, usize) {
        let s = self.top_seg();
        (s.vertex(s.len - 1), s.value(s.len - 1))
    }

    /// Entry below the top if it lies in the same segment.
    pub fn below_top(&self) -> Option<(usize, usize)> {
        let s = self.top_seg();
        (s.len >= 2).then(|| (s.vertex(s.len - 2), s.value(s.len - 2)))
    }

    pub fn set_top_value(&mut self, val: usize) {
        let s = self.top_seg_mut();
        let i = s.len - 1;
        s.set_value(i, val);
    }

    /// Pushes an entry. Returns true when it opened a new segment.
    pub fn push(&mut self, hue: usize, v: usize, val: usize) -> bool {
        let fresh = self.count == 0 || self.top_seg().hue != hue;
        if fresh {
            debug_assert!(self.max_hue().map_or(true, |h| h < hue));
            if self.count == 2 {
                self.resident.swap(0, 1);
                self.count = 1;
                self.discards += 1;
            }
            let b = self.resident[self.count];
            self.bufs[b].reset(hue);
            self.count += 1;
            self.present |= 1 << hue;
        }
        self.top_seg_mut().push(v, val);
        fresh
    }

    pub fn pop(&mut self) -> (usize, usize) {
        let top = self.top();
        let s = self.top_seg_mut();
        s.len -= 1;
        if s.len == 0 {
            let hue = s.hue;
            self.present &= !(1 << hue);
            self.count -= 1;
        }
        top
    }

    /// Installs the restored segment of the top hue. Nothing is resident.
    pub fn install(&mut self, hue: usize, entries: impl Iterator<Item = (usize, usize)>) {
        debug_assert_eq!(self.count, 0);
        let b = self.resident[0];
        self.bufs[b].reset(hue);
        for (v, val) in entries {
            self.bufs[b].push(v, val);
        }
        debug_assert!(self.bufs[b].len > 0);
        self.count = 1;
    }

    pub fn bits(&self) -> u64 {
        self.bufs[0].bits() + self.bufs[1].bits() + 64 * 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_two_segments_and_reports_missing() {
        let mut s = SegStack::new(4, 8, 8);
        assert!(s.push(0, 1, 10));
        assert!(!s.push(0, 2, 11));
        assert!(s.push(1, 3, 12));
        assert!(s.push(3, 4, 13));
        assert_eq!(s.discards, 1);
        assert!(s.resident(0).is_none());
        assert_eq!(s.pop(), (4, 13));
        assert_eq!(s.missing_top(), None);
        assert_eq!(s.top(), (3, 12));
        assert_eq!(s.pop(), (3, 12));
        assert_eq!(s.missing_top(), Some(0));
        s.install(0, [(1, 10), (2, 11)].into_iter());
        assert_eq!(s.pop(), (2, 11));
        assert_eq!(s.below_top(), None);
        assert_eq!(s.pop(), (1, 10));
        assert!(s.is_empty());
    }
}
