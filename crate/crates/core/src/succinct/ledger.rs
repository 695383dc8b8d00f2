//! Working-space accounting: every algorithm registers the bits of the
//! structures it allocates and releases them when they are dropped.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::SuccinctError;

/// Live and peak working bits, in total and per structure tag.
#[derive(Clone, Debug, Default)]
pub struct SpaceLedger {
    live: u64,
    peak: u64,
    tags: BTreeMap<&'static str, TagUsage>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TagUsage {
    pub live: u64,
    pub peak: u64,
}

impl SpaceLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(&mut self, tag: &'static str, bits: u64) {
        let usage = self.tags.entry(tag).or_default();
        usage.live += bits;
        usage.peak = usage.peak.max(usage.live);
        self.live += bits;
        self.peak = self.peak.max(self.live);
    }

    pub fn release(&mut self, tag: &'static str, bits: u64) -> Result<(), SuccinctError> {
        let usage = self.tags.get_mut(tag).filter(|u| u.live >= bits).ok_or(
            SuccinctError::OverRelease {
                tag,
                requested: bits,
            },
        )?;
        usage.live -= bits;
        self.live -= bits;
        Ok(())
    }

    /// Replaces the registered size of `tag` by `bits` (for structures that
    /// grow or shrink in place).
    pub fn resize(&mut self, tag: &'static str, bits: u64) {
        let current = self.tags.get(tag).map_or(0, |u| u.live);
        if bits >= current {
            self.register(tag, bits - current);
        } else {
            // Cannot fail: we release at most what is live.
            let _ = self.release(tag, current - bits);
        }
    }

    #[inline]
    pub fn live(&self) -> u64 {
        self.live
    }

    #[inline]
    pub fn peak(&self) -> u64 {
        self.peak
    }

    /// Per-tag usage, sorted by tag.
    pub fn report(&self) -> Vec<(&'static str, TagUsage)> {
        self.tags.iter().map(|(&t, &u)| (t, u)).collect()
    }
}
