//! Choice dictionaries: subsets of `{0, .., n-1}` with O(1)-word insert,
//! delete, membership, choice and successor queries.
//!
//! Members are kept in a 64-ary hierarchy of bit words: level 0 holds one
//! bit per element, each higher level one bit per non-empty word below.
//! Every operation touches one word per level, i.e. `⌈log64 n⌉ ≤ 6` words
//! for any 64-bit universe. Storage is allocated zeroed, so construction
//! writes O(1) words and pages are touched lazily.

use alloc::vec;
use alloc::vec::Vec;

use super::bits::WORD;
use super::static_alloc::StaticAllocationIndex;
use super::SuccinctError;

const MAX_LEVELS: usize = 11;

/// Word offsets of each level inside a flat word slice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct Layout {
    levels: u8,
    offset: [u32; MAX_LEVELS],
    len: [u32; MAX_LEVELS],
}

impl Layout {
    pub(crate) fn for_universe(universe: usize) -> Self {
        let mut layout = Layout::default();
        if universe == 0 {
            return layout;
        }
        let mut count = universe;
        let mut at = 0u32;
        loop {
            let words = count.div_ceil(WORD);
            let l = layout.levels as usize;
            layout.offset[l] = at;
            layout.len[l] = words as u32;
            layout.levels += 1;
            at += words as u32;
            if words == 1 {
                break;
            }
            count = words;
        }
        layout
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        match self.levels {
            0 => 0,
            l => (self.offset[l as usize - 1] + self.len[l as usize - 1]) as usize,
        }
    }

    #[inline]
    fn contains(&self, w: &[u64], x: usize) -> bool {
        w[self.offset[0] as usize + x / WORD] >> (x % WORD) & 1 == 1
    }

    /// Returns true when `x` was newly added.
    #[inline]
    fn insert(&self, w: &mut [u64], x: usize) -> bool {
        let mut i = x;
        for l in 0..self.levels as usize {
            let slot = &mut w[self.offset[l] as usize + i / WORD];
            let was = *slot;
            *slot |= 1 << (i % WORD);
            if l == 0 && was == *slot {
                return false;
            }
            if was != 0 {
                break;
            }
            i /= WORD;
        }
        true
    }

    /// Returns true when `x` was present.
    #[inline]
    fn remove(&self, w: &mut [u64], x: usize) -> bool {
        let mut i = x;
        for l in 0..self.levels as usize {
            let slot = &mut w[self.offset[l] as usize + i / WORD];
            let was = *slot;
            *slot &= !(1 << (i % WORD));
            if l == 0 && was == *slot {
                return false;
            }
            if *slot != 0 {
                break;
            }
            i /= WORD;
        }
        true
    }

    /// Smallest member `≥ x`.
    fn successor(&self, w: &[u64], x: usize) -> Option<usize> {
        if self.levels == 0 {
            return None;
        }
        // Climb until a level has a set bit at or after the current index.
        let mut i = x;
        let mut level = 0usize;
        let found = loop {
            let word_idx = i / WORD;
            if word_idx >= self.len[level] as usize {
                return None;
            }
            let word = w[self.offset[level] as usize + word_idx] & (u64::MAX << (i % WORD));
            if word != 0 {
                break word_idx * WORD + word.trailing_zeros() as usize;
            }
            level += 1;
            if level == self.levels as usize {
                return None;
            }
            i = word_idx + 1;
        };
        // Descend along minimum bits.
        let mut pos = found;
        while level > 0 {
            level -= 1;
            let word = w[self.offset[level] as usize + pos];
            pos = pos * WORD + word.trailing_zeros() as usize;
        }
        Some(pos)
    }

    fn clear(&self, w: &mut [u64]) {
        w.iter_mut().for_each(|x| *x = 0);
    }
}

/// A subset `S ⊆ {0, .., n-1}`; `choice` returns the minimum member.
#[derive(Clone, Debug)]
pub struct ChoiceDictionary {
    universe: usize,
    len: usize,
    layout: Layout,
    words: Vec<u64>,
}

impl ChoiceDictionary {
    pub fn new(universe: usize) -> Self {
        let layout = Layout::for_universe(universe);
        Self {
            universe,
            len: 0,
            words: vec![0; layout.words()],
            layout,
        }
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
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
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.universe, "element {x} outside universe {}", self.universe);
        let added = self.layout.insert(&mut self.words, x);
        self.len += added as usize;
        added
    }

    #[inline]
    pub fn remove(&mut self, x: usize) -> bool {
        assert!(x < self.universe, "element {x} outside universe {}", self.universe);
        let removed = self.layout.remove(&mut self.words, x);
        self.len -= removed as usize;
        removed
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.layout.contains(&self.words, x)
    }

    pub fn try_insert(&mut self, x: usize) -> Result<bool, SuccinctError> {
        self.check(x)?;
        Ok(self.insert(x))
    }

    pub fn try_remove(&mut self, x: usize) -> Result<bool, SuccinctError> {
        self.check(x)?;
        Ok(self.remove(x))
    }

    fn check(&self, x: usize) -> Result<(), SuccinctError> {
        if x < self.universe {
            Ok(())
        } else {
            Err(SuccinctError::OutOfUniverse {
                element: x,
                universe: self.universe,
            })
        }
    }

    /// The minimum member, if any.
    #[inline]
    pub fn choice(&self) -> Option<usize> {
        if self.len == 0 {
            None
        } else {
            self.layout.successor(&self.words, 0)
        }
    }

    /// Smallest member `≥ x`.
    #[inline]
    pub fn successor(&self, x: usize) -> Option<usize> {
        self.layout.successor(&self.words, x)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> ChoiceIter<'_> {
        ChoiceIter {
            layout: &self.layout,
            words: &self.words,
            next: 0,
        }
    }

    /// Empties the set in time linear in its size.
    pub fn clear(&mut self) {
        while let Some(x) = self.choice() {
            self.remove(x);
        }
    }

    pub fn bits(&self) -> u64 {
        (self.words.capacity() * WORD) as u64
    }
}

pub struct ChoiceIter<'a> {
    layout: &'a Layout,
    words: &'a [u64],
    next: usize,
}

impl Iterator for ChoiceIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let x = self.layout.successor(self.words, self.next)?;
        self.next = x + 1;
        Some(x)
    }
}

/// One choice dictionary per item, item `v` with universe `{0, .., d_v - 1}`,
/// all sharing one word pool located by static space allocation.
#[derive(Clone, Debug)]
pub struct ChoiceDictionaryFamily {
    index: StaticAllocationIndex,
    pool: Vec<u64>,
}

impl ChoiceDictionaryFamily {
    pub fn new<I>(universes: I) -> Self
    where
        I: IntoIterator<Item = usize>,
        I::IntoIter: Clone,
    {
        let words = universes
            .into_iter()
            .map(|d| Layout::for_universe(d).words());
        let index = StaticAllocationIndex::new(words);
        let pool = vec![0; index.total()];
        Self { index, pool }
    }

    #[inline]
    fn part(&self, v: usize) -> (Layout, usize, usize) {
        let start = self.index.start(v);
        let end = self.index.start(v + 1);
        (layout_for_words(end - start), start, end)
    }

    #[inline]
    pub fn insert(&mut self, v: usize, x: usize) -> bool {
        let (layout, s, e) = self.part(v);
        layout.insert(&mut self.pool[s..e], x)
    }

    #[inline]
    pub fn remove(&mut self, v: usize, x: usize) -> bool {
        let (layout, s, e) = self.part(v);
        layout.remove(&mut self.pool[s..e], x)
    }

    #[inline]
    pub fn contains(&self, v: usize, x: usize) -> bool {
        let (layout, s, e) = self.part(v);
        s < e && layout.contains(&self.pool[s..e], x)
    }

    #[inline]
    pub fn choice(&self, v: usize) -> Option<usize> {
        self.successor(v, 0)
    }

    #[inline]
    pub fn successor(&self, v: usize, x: usize) -> Option<usize> {
        let (layout, s, e) = self.part(v);
        layout.successor(&self.pool[s..e], x)
    }

    /// Members of item `v` in ascending order; locates the item once.
    pub fn iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let (layout, s, e) = self.part(v);
        let words = &self.pool[s..e];
        let mut next = 0;
        core::iter::from_fn(move || {
            let x = layout.successor(words, next)?;
            next = x + 1;
            Some(x)
        })
    }

    pub fn clear(&mut self, v: usize) {
        let (layout, s, e) = self.part(v);
        layout.clear(&mut self.pool[s..e]);
    }

    pub fn bits(&self) -> u64 {
        self.index.bits() + (self.pool.capacity() * WORD) as u64
    }
}

/// Level structure of a hierarchy occupying `words` words.
///
/// The total word count is strictly increasing in the level-0 word count
/// and close to `64/63` times it, so the estimate below is off by at most
/// the number of levels and a few steps find the exact value.
fn layout_for_words(words: usize) -> Layout {
    if words == 0 {
        return Layout::default();
    }
    if words == 1 {
        return Layout::for_universe(WORD);
    }
    let total = |w0: usize| Layout::for_universe(w0 * WORD).words();
    let mut w0 = (words * 63 / 64).max(1);
    while w0 > 1 && total(w0) > words {
        w0 -= 1;
    }
    while total(w0) < words {
        w0 += 1;
    }
    debug_assert_eq!(total(w0), words);
    Layout::for_universe(w0 * WORD)
}
