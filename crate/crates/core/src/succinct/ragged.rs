//! Ragged dictionary: at most `κ = O(n / log n)` keys from `{0, .., n-1}`,
//! each with `b = O(log n)` bits of satellite data, in O(n) bits.
//!
//! Keys are split into buckets of `⌈log2 n⌉` consecutive values and every
//! bucket owns a height-balanced (AVL) search tree. Tree nodes are
//! fixed-width records in a preallocated arena of `κ` slots; free slots
//! live in a choice dictionary. A search only touches the tree of the
//! key's bucket, so lookups, inserts and deletes take O(log log n) time.
//! Deleted slots go back on the free list; the arena is never compacted.

use super::bits::{bits_for, ceil_log2, BitVec, IntVector};
use super::choice::ChoiceDictionary;
use super::SuccinctError;

const HEIGHT_BITS: u32 = 6;

#[derive(Clone, Copy, Debug)]
struct NodeLayout {
    key_bits: u32,
    sat_bits: u32,
    ptr_bits: u32,
    width: usize,
}

impl NodeLayout {
    fn key_at(&self) -> usize {
        0
    }
    fn sat_at(&self) -> usize {
        self.key_bits as usize
    }
    fn left_at(&self) -> usize {
        self.sat_at() + self.sat_bits as usize
    }
    fn right_at(&self) -> usize {
        self.left_at() + self.ptr_bits as usize
    }
    fn height_at(&self) -> usize {
        self.right_at() + self.ptr_bits as usize
    }
}

/// Node handles are `slot + 1`; zero is the empty tree.
type Link = usize;

#[derive(Clone, Debug)]
pub struct RaggedDictionary {
    universe: usize,
    capacity: usize,
    bucket_width: usize,
    present: BitVec,
    roots: IntVector,
    layout: NodeLayout,
    arena: BitVec,
    free: ChoiceDictionary,
    len: usize,
}

impl RaggedDictionary {
    /// A dictionary over `{0, .., universe-1}` holding at most `capacity`
    /// keys with `satellite_bits`-bit values.
    pub fn new(universe: usize, capacity: usize, satellite_bits: u32) -> Self {
        assert!(satellite_bits <= 64);
        let bucket_width = (ceil_log2(universe as u64) as usize).max(1);
        let buckets = universe.div_ceil(bucket_width);
        let ptr_bits = bits_for(capacity as u64);
        let layout = NodeLayout {
            key_bits: bits_for(bucket_width as u64 - 1),
            sat_bits: satellite_bits,
            ptr_bits,
            width: 0,
        };
        let width = layout.height_at() + HEIGHT_BITS as usize;
        let layout = NodeLayout { width, ..layout };
        let mut free = ChoiceDictionary::new(capacity);
        for s in 0..capacity {
            free.insert(s);
        }
        Self {
            universe,
            capacity,
            bucket_width,
            present: BitVec::zeros(universe),
            roots: IntVector::new(buckets, ptr_bits),
            layout,
            arena: BitVec::zeros(capacity * width),
            free,
            len: 0,
        }
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
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn satellite_bits(&self) -> u32 {
        self.layout.sat_bits
    }

    #[inline]
    pub fn contains(&self, key: usize) -> bool {
        key < self.universe && self.present.get(key)
    }

    pub fn get(&self, key: usize) -> Option<u64> {
        if !self.contains(key) {
            return None;
        }
        let (bucket, off) = self.split(key);
        let mut t = self.roots.get(bucket) as Link;
        while t != 0 {
            let k = self.key(t);
            if off == k {
                return Some(self.sat(t));
            }
            t = if off < k { self.left(t) } else { self.right(t) };
        }
        unreachable!("membership bit set without a tree node")
    }

    /// Inserts or overwrites. Returns the previous satellite, if any.
    pub fn insert(&mut self, key: usize, satellite: u64) -> Result<Option<u64>, SuccinctError> {
        self.check(key)?;
        if self.layout.sat_bits < 64 && satellite >> self.layout.sat_bits != 0 {
            return Err(SuccinctError::SatelliteTooWide {
                bits: self.layout.sat_bits,
            });
        }
        if self.present.get(key) {
            let old = self.get(key);
            let (bucket, off) = self.split(key);
            let mut t = self.roots.get(bucket) as Link;
            while self.key(t) != off {
                t = if off < self.key(t) { self.left(t) } else { self.right(t) };
            }
            self.set_field(t, self.layout.sat_at(), self.layout.sat_bits, satellite);
            return Ok(old);
        }
        let slot = self.free.choice().ok_or(SuccinctError::CapacityExceeded {
            capacity: self.capacity,
        })?;
        self.free.remove(slot);
        let node = slot + 1;
        let (bucket, off) = self.split(key);
        self.set_field(node, self.layout.key_at(), self.layout.key_bits, off as u64);
        self.set_field(node, self.layout.sat_at(), self.layout.sat_bits, satellite);
        self.set_left(node, 0);
        self.set_right(node, 0);
        self.set_height(node, 1);
        let root = self.roots.get(bucket) as Link;
        let root = self.avl_insert(root, node, off);
        self.roots.set(bucket, root as u64);
        self.present.set(key, true);
        self.len += 1;
        Ok(None)
    }

    /// Removes `key`, returning its satellite.
    pub fn remove(&mut self, key: usize) -> Result<Option<u64>, SuccinctError> {
        self.check(key)?;
        if !self.present.get(key) {
            return Ok(None);
        }
        let (bucket, off) = self.split(key);
        let root = self.roots.get(bucket) as Link;
        let mut removed = 0;
        let root = self.avl_remove(root, off, &mut removed);
        debug_assert_ne!(removed, 0);
        self.roots.set(bucket, root as u64);
        let value = self.sat(removed);
        self.free.insert(removed - 1);
        self.present.set(key, false);
        self.len -= 1;
        Ok(Some(value))
    }

    pub fn bits(&self) -> u64 {
        self.present.bits() + self.roots.bits() + self.arena.bits() + self.free.bits()
    }

    fn check(&self, key: usize) -> Result<(), SuccinctError> {
        if key < self.universe {
            Ok(())
        } else {
            Err(SuccinctError::OutOfUniverse {
                element: key,
                universe: self.universe,
            })
        }
    }

    #[inline]
    fn split(&self, key: usize) -> (usize, usize) {
        (key / self.bucket_width, key % self.bucket_width)
    }

    #[inline]
    fn field(&self, node: Link, at: usize, width: u32) -> u64 {
        self.arena.get_bits((node - 1) * self.layout.width + at, width)
    }

    #[inline]
    fn set_field(&mut self, node: Link, at: usize, width: u32, value: u64) {
        self.arena
            .set_bits((node - 1) * self.layout.width + at, width, value)
    }

    fn key(&self, t: Link) -> usize {
        self.field(t, self.layout.key_at(), self.layout.key_bits) as usize
    }
    fn sat(&self, t: Link) -> u64 {
        self.field(t, self.layout.sat_at(), self.layout.sat_bits)
    }
    fn left(&self, t: Link) -> Link {
        self.field(t, self.layout.left_at(), self.layout.ptr_bits) as Link
    }
    fn right(&self, t: Link) -> Link {
        self.field(t, self.layout.right_at(), self.layout.ptr_bits) as Link
    }
    fn height(&self, t: Link) -> i32 {
        if t == 0 {
            0
        } else {
            self.field(t, self.layout.height_at(), HEIGHT_BITS) as i32
        }
    }
    fn set_left(&mut self, t: Link, c: Link) {
        self.set_field(t, self.layout.left_at(), self.layout.ptr_bits, c as u64)
    }
    fn set_right(&mut self, t: Link, c: Link) {
        self.set_field(t, self.layout.right_at(), self.layout.ptr_bits, c as u64)
    }
    fn set_height(&mut self, t: Link, h: i32) {
        self.set_field(t, self.layout.height_at(), HEIGHT_BITS, h as u64)
    }

    fn update(&mut self, t: Link) {
        let h = 1 + self.height(self.left(t)).max(self.height(self.right(t)));
        self.set_height(t, h);
    }

    fn rotate_right(&mut self, t: Link) -> Link {
        let l = self.left(t);
        self.set_left(t, self.right(l));
        self.set_right(l, t);
        self.update(t);
        self.update(l);
        l
    }

    fn rotate_left(&mut self, t: Link) -> Link {
        let r = self.right(t);
        self.set_right(t, self.left(r));
        self.set_left(r, t);
        self.update(t);
        self.update(r);
        r
    }

    fn rebalance(&mut self, t: Link) -> Link {
        self.update(t);
        let balance = self.height(self.left(t)) - self.height(self.right(t));
        if balance > 1 {
            let l = self.left(t);
            if self.height(self.left(l)) < self.height(self.right(l)) {
                let nl = self.rotate_left(l);
                self.set_left(t, nl);
            }
            return self.rotate_right(t);
        }
        if balance < -1 {
            let r = self.right(t);
            if self.height(self.right(r)) < self.height(self.left(r)) {
                let nr = self.rotate_right(r);
                self.set_right(t, nr);
            }
            return self.rotate_left(t);
        }
        t
    }

    fn avl_insert(&mut self, t: Link, node: Link, off: usize) -> Link {
        if t == 0 {
            return node;
        }
        if off < self.key(t) {
            let l = self.avl_insert(self.left(t), node, off);
            self.set_left(t, l);
        } else {
            let r = self.avl_insert(self.right(t), node, off);
            self.set_right(t, r);
        }
        self.rebalance(t)
    }

    /// Detaches the minimum of `t`, returning (new root, detached node).
    fn avl_take_min(&mut self, t: Link) -> (Link, Link) {
        let l = self.left(t);
        if l == 0 {
            return (self.right(t), t);
        }
        let (nl, min) = self.avl_take_min(l);
        self.set_left(t, nl);
        (self.rebalance(t), min)
    }

    fn avl_remove(&mut self, t: Link, off: usize, removed: &mut Link) -> Link {
        if t == 0 {
            return 0;
        }
        let k = self.key(t);
        if off < k {
            let l = self.avl_remove(self.left(t), off, removed);
            self.set_left(t, l);
        } else if off > k {
            let r = self.avl_remove(self.right(t), off, removed);
            self.set_right(t, r);
        } else {
            *removed = t;
            let (l, r) = (self.left(t), self.right(t));
            if r == 0 {
                return l;
            }
            let (nr, min) = self.avl_take_min(r);
            self.set_left(min, l);
            self.set_right(min, nr);
            return self.rebalance(min);
        }
        self.rebalance(t)
    }
}
