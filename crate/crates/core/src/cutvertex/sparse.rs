//! Cut vertices in O(n log log n) bits, independent of m.
//!
//! The DFS stack S and the marking stack U are cut into hue segments (a
//! hue is the visit-order block of a vertex, fixed by a first DFS). At
//! most two segments per stack are resident; a dropped S segment is
//! rebuilt from its anchor by following gray same-hue neighbours, and a
//! dropped U segment is the restored S segment filtered to the vertices
//! whose child edge is not yet full. Per-edge marks are replaced by a
//! 2-bit `umark` per vertex for the edge to its gray child.

use alloc::vec::Vec;

use super::depth::{DepthMap, OffsetTable};
use super::marks::{BLACK, GRAY, WHITE};
use super::segstack::{SegStack, Segment};
use crate::graph::Graph;
use crate::succinct::{bits_for, ceil_log2, BitVec, IntVector, SpaceLedger};

const UNMARKED: u64 = 0;
const HALF: u64 = 1;
const FULL: u64 = 2;

/// Depth maps kept besides the one for the newest hue.
const CACHED_MAPS: usize = 2;

#[derive(Clone, Copy, Debug, Default)]
pub struct SparseOptions {
    /// Overrides `max(1, ⌈n/⌈log2 n⌉⌉)`; raised if it would need more
    /// than 64 hues.
    pub segment_size: Option<usize>,
    /// Mirror both stacks in full and compare every restored segment with
    /// the mirror. The mirror is not charged to the ledger.
    pub verify_restores: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseStats {
    pub segment_size: usize,
    pub hues: usize,
    pub s_restores: usize,
    pub u_restores: usize,
    pub depth_map_builds: usize,
    /// Restored segments that differed from the mirror, or U entries not
    /// found in S. Always zero unless something is broken.
    pub shadow_mismatches: usize,
}

/// `max(1, ⌈n/⌈log2 n⌉⌉)`.
pub fn default_segment_size(n: usize) -> usize {
    let l = ceil_log2(n as u64).max(1) as usize;
    n.div_ceil(l).max(1)
}

fn effective_segment_size(n: usize, requested: Option<usize>) -> usize {
    requested
        .unwrap_or_else(|| default_segment_size(n))
        .max(n.div_ceil(64))
        .max(1)
}

pub fn cut_vertices_sparse(g: &Graph, ledger: &mut SpaceLedger) -> Vec<usize> {
    cut_vertices_sparse_with(g, ledger, SparseOptions::default()).0
}

pub fn cut_vertices_sparse_with(
    g: &Graph,
    ledger: &mut SpaceLedger,
    opts: SparseOptions,
) -> (Vec<usize>, SparseStats) {
    let seg = effective_segment_size(g.n(), opts.segment_size);
    let mut run = Sparse::new(g, seg, opts.verify_restores, ledger);
    run.pass(true);
    run.reset_colors();
    run.pass(false);
    let out = (0..g.n()).filter(|&v| run.cut.get(v)).collect();
    let stats = run.stats.clone();
    run.release(ledger);
    (out, stats)
}

/// Hue of every vertex: its 0-based DFS visit position divided by
/// `segment_size`.
pub fn assign_hues(g: &Graph, segment_size: usize, ledger: &mut SpaceLedger) -> Vec<usize> {
    let seg = effective_segment_size(g.n(), Some(segment_size));
    let mut run = Sparse::new(g, seg, false, ledger);
    run.pass(true);
    let out = (0..g.n()).map(|v| run.hue.get(v) as usize).collect();
    run.release(ledger);
    out
}

#[derive(Default)]
struct Shadow {
    s: Vec<(usize, usize)>,
    u: Vec<(usize, usize)>,
}

struct Sparse<'g> {
    g: &'g Graph,
    seg: usize,
    color: IntVector,
    hue: IntVector,
    umark: IntVector,
    scratch: BitVec,
    cut: BitVec,
    s: SegStack,
    u: SegStack,
    anchor_first: IntVector,
    /// Parent slot + 1 at the anchor vertex, 0 for a root.
    anchor_pslot: IntVector,
    anchor_depth: IntVector,
    walk: Segment,
    table: OffsetTable,
    block: usize,
    newest: Option<DepthMap>,
    cache: Vec<DepthMap>,
    clock: u64,
    preorder: usize,
    depth: usize,
    stats: SparseStats,
    shadow: Option<Shadow>,
    fixed_bits: u64,
    map_peak: u64,
}

impl<'g> Sparse<'g> {
    fn new(g: &'g Graph, seg: usize, verify: bool, ledger: &mut SpaceLedger) -> Self {
        let n = g.n();
        let hues = n.div_ceil(seg).max(1);
        let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
        let vbits = bits_for(n as u64);
        let block = (ceil_log2(n as u64) as usize).div_ceil(2).max(1);
        let run = Self {
            g,
            seg,
            color: IntVector::new(n, 2),
            hue: IntVector::for_max(n, hues as u64),
            umark: IntVector::new(n, 2),
            scratch: BitVec::zeros(n),
            cut: BitVec::zeros(n),
            s: SegStack::new(seg, vbits, bits_for(max_deg as u64)),
            u: SegStack::new(seg, vbits, vbits),
            anchor_first: IntVector::new(hues, vbits),
            anchor_pslot: IntVector::for_max(hues, max_deg as u64),
            anchor_depth: IntVector::new(hues, vbits),
            walk: Segment::new(seg, vbits, bits_for(max_deg as u64)),
            table: OffsetTable::new(block),
            block,
            newest: None,
            cache: Vec::with_capacity(CACHED_MAPS + 1),
            clock: 0,
            preorder: 0,
            depth: 0,
            stats: SparseStats {
                segment_size: seg,
                hues,
                ..SparseStats::default()
            },
            shadow: verify.then(Shadow::default),
            fixed_bits: 0,
            map_peak: 0,
        };
        let mut run = run;
        run.fixed_bits = run.color.bits()
            + run.hue.bits()
            + run.umark.bits()
            + run.scratch.bits()
            + run.cut.bits()
            + run.s.bits()
            + run.u.bits()
            + run.anchor_first.bits()
            + run.anchor_pslot.bits()
            + run.anchor_depth.bits()
            + run.walk.bits()
            + run.table.bits()
            + 64 * 8;
        ledger.register("sparse.state", run.fixed_bits);
        run
    }

    /// Depth maps come and go during the run; their peak is charged here,
    /// on top of the fixed state that is live the whole time.
    fn release(&mut self, ledger: &mut SpaceLedger) {
        ledger.register("sparse.depth", self.map_peak);
        let _ = ledger.release("sparse.depth", self.map_peak);
        let _ = ledger.release("sparse.state", self.fixed_bits);
    }

    fn track_maps(&mut self) {
        let live: u64 = self.cache.iter().chain(self.newest.iter()).map(|m| m.bits()).sum();
        self.map_peak = self.map_peak.max(live);
    }

    fn reset_colors(&mut self) {
        for v in 0..self.g.n() {
            self.color.set(v, WHITE);
        }
    }

    #[inline]
    fn hue_of(&self, v: usize) -> usize {
        self.hue.get(v) as usize
    }

    fn pass(&mut self, assigning: bool) {
        for r in 0..self.g.n() {
            if self.color.get(r) == WHITE {
                self.component(r, assigning);
            }
        }
    }

    fn discover(&mut self, v: usize, assigning: bool, depth: usize) {
        self.color.set(v, GRAY);
        if assigning {
            self.hue.set(v, (self.preorder / self.seg) as u64);
            self.preorder += 1;
        } else {
            let h = self.hue_of(v);
            if self.newest.as_ref().map_or(true, |m| m.hue != h) {
                self.open_newest(h);
            }
            let m = self.newest.as_mut().unwrap();
            m.set(&self.table, v, depth);
        }
    }

    fn push_s(&mut self, v: usize, pslot: Option<usize>) {
        let h = self.hue_of(v);
        if self.s.push(h, v, 0) {
            self.anchor_first.set(h, v as u64);
            self.anchor_pslot.set(h, pslot.map_or(0, |p| p as u64 + 1));
            self.anchor_depth.set(h, self.depth as u64);
        }
        if let Some(sh) = &mut self.shadow {
            sh.s.push((v, 0));
        }
    }

    fn set_cursor(&mut self, c: usize) {
        self.s.set_top_value(c);
        if let Some(sh) = &mut self.shadow {
            sh.s.last_mut().unwrap().1 = c;
        }
    }

    fn push_u(&mut self, v: usize, d: usize) {
        let h = self.hue_of(v);
        // A pop may have crossed into a dropped segment of the same hue.
        if self.u.missing_top() == Some(h) {
            self.restore_u(h);
        }
        self.u.push(h, v, d);
        self.umark.set(v, UNMARKED);
        if let Some(sh) = &mut self.shadow {
            sh.u.push((v, d));
        }
    }

    fn u_top(&mut self) -> Option<(usize, usize)> {
        if let Some(h) = self.u.missing_top() {
            self.restore_u(h);
        }
        (!self.u.is_empty()).then(|| self.u.top())
    }

    fn pop_u(&mut self) -> (usize, usize) {
        let _ = self.u_top();
        if let Some(sh) = &mut self.shadow {
            sh.u.pop();
        }
        self.u.pop()
    }

    fn component(&mut self, r: usize, assigning: bool) {
        let g = self.g;
        self.depth = 0;
        self.discover(r, assigning, 0);
        self.push_s(r, None);
        let mut root_children = 0;
        loop {
            debug_assert!(self.s.missing_top().is_none());
            let (v, c) = self.s.top();
            if c < g.degree(v) {
                self.set_cursor(c + 1);
                let u = g.neighbor(v, c);
                match self.color.get(u) {
                    WHITE => {
                        if !assigning {
                            self.push_u(v, self.depth);
                        }
                        self.depth += 1;
                        self.discover(u, assigning, self.depth);
                        self.push_s(u, Some(g.mate(v, c)));
                    }
                    GRAY if !assigning && !self.is_parent_slot(v, c) => self.back_edge(u),
                    _ => {}
                }
                continue;
            }
            // Retreat from v.
            let (p, pslot) = match self.s.below_top() {
                Some((p, _)) => (p, None),
                None => {
                    let a = self.anchor_pslot.get(self.hue_of(v)) as usize;
                    match a.checked_sub(1) {
                        None => {
                            self.color.set(v, BLACK);
                            self.s.pop();
                            if let Some(sh) = &mut self.shadow {
                                sh.s.pop();
                            }
                            break;
                        }
                        Some(ps) => (g.neighbor(v, ps), Some(ps)),
                    }
                }
            };
            if !assigning && self.umark.get(p) != FULL {
                if p != r {
                    self.cut.set(p, true);
                }
                let (x, _) = self.pop_u();
                debug_assert_eq!(x, p);
            }
            self.color.set(v, BLACK);
            self.s.pop();
            if let Some(sh) = &mut self.shadow {
                sh.s.pop();
            }
            self.depth -= 1;
            if let Some(h) = self.s.missing_top() {
                let ps = pslot.expect("a segment boundary lies between v and its parent");
                self.restore_s(h, g.mate(v, ps) + 1);
            }
            if p == r {
                root_children += 1;
            }
        }
        if !assigning && root_children >= 2 {
            self.cut.set(r, true);
        }
        debug_assert!(self.u.is_empty());
    }

    fn is_parent_slot(&self, v: usize, c: usize) -> bool {
        match self.s.below_top() {
            Some((p, _)) => self.g.neighbor(v, c) == p,
            None => self.anchor_pslot.get(self.hue_of(v)) as usize == c + 1,
        }
    }

    /// Back edge from the current vertex up to the gray ancestor `a`.
    fn back_edge(&mut self, a: usize) {
        let ha = self.hue_of(a);
        let mut da = None;
        while let Some((x, dx)) = self.u_top() {
            let hx = self.hue_of(x);
            if hx < ha {
                break;
            }
            if hx == ha {
                if x == a {
                    self.umark.set(a, HALF);
                    break;
                }
                let d = match da {
                    Some(d) => d,
                    None => {
                        let d = self.depth_of(a);
                        da = Some(d);
                        d
                    }
                };
                if dx <= d {
                    break;
                }
            }
            self.umark.set(x, FULL);
            self.pop_u();
        }
    }

    /// Rebuilds the gray vertices of hue `h` in path order into `self.walk`,
    /// with the slot after the edge to each one's gray child as value.
    fn walk_segment(&mut self, h: usize) {
        let g = self.g;
        self.walk.reset(h);
        let mut x = self.anchor_first.get(h) as usize;
        self.scratch.set(x, true);
        loop {
            let next = (0..g.degree(x)).find(|&i| {
                let y = g.neighbor(x, i);
                self.color.get(y) == GRAY && self.hue_of(y) == h && !self.scratch.get(y)
            });
            match next {
                Some(i) => {
                    self.walk.push(x, i + 1);
                    x = g.neighbor(x, i);
                    self.scratch.set(x, true);
                }
                None => {
                    let below = if h >= 63 { u64::MAX } else { (2u64 << h) - 1 };
                    let above = self.s.present & !below;
                    let cursor = if above == 0 {
                        0
                    } else {
                        let h2 = above.trailing_zeros() as usize;
                        let f = self.anchor_first.get(h2) as usize;
                        let ps = self.anchor_pslot.get(h2) as usize - 1;
                        g.mate(f, ps) + 1
                    };
                    self.walk.push(x, cursor);
                    break;
                }
            }
        }
        for i in 0..self.walk.len {
            let v = self.walk.vertex(i);
            self.scratch.set(v, false);
        }
    }

    fn restore_s(&mut self, h: usize, last_cursor: usize) {
        self.walk_segment(h);
        let last = self.walk.len - 1;
        self.walk.set_value(last, last_cursor);
        self.s.install(h, self.walk.entries());
        self.stats.s_restores += 1;
        if let Some(sh) = &self.shadow {
            let hue = &self.hue;
            let expect = sh.s.iter().filter(|e| hue.get(e.0) as usize == h);
            if !expect.copied().eq(self.walk.entries()) {
                self.stats.shadow_mismatches += 1;
            }
        }
    }

    fn restore_u(&mut self, h: usize) {
        let top = self.s.top().0;
        let base = self.anchor_depth.get(h) as usize;
        self.fill_walk_from_s(h);
        let umark = &self.umark;
        let entries = self
            .walk
            .entries()
            .enumerate()
            .filter(|&(_, (x, _))| x != top && umark.get(x) != FULL)
            .map(|(i, (x, _))| (x, base + i));
        self.u.install(h, entries);
        self.stats.u_restores += 1;
        if let Some(sh) = &self.shadow {
            let hue = &self.hue;
            let expect = sh.u.iter().filter(|e| hue.get(e.0) as usize == h);
            let got = self.u.resident(h).unwrap();
            if !expect.copied().eq(got.entries()) {
                self.stats.shadow_mismatches += 1;
            }
        }
    }

    /// Puts the S segment of hue `h` into `self.walk`, copying it when it
    /// is resident.
    fn fill_walk_from_s(&mut self, h: usize) {
        if let Some(seg) = self.s.resident(h) {
            self.walk.reset(h);
            for i in 0..seg.len {
                self.walk.push(seg.vertex(i), seg.value(i));
            }
        } else {
            self.walk_segment(h);
        }
    }

    fn open_newest(&mut self, h: usize) {
        let m = self.build_map(h);
        if let Some(old) = self.newest.replace(m) {
            self.stash(old);
        }
        self.track_maps();
    }

    fn build_map(&mut self, h: usize) -> DepthMap {
        self.stats.depth_map_builds += 1;
        DepthMap::build(h, &self.hue, self.block, self.seg, self.g.n())
    }

    fn stash(&mut self, mut m: DepthMap) {
        self.clock += 1;
        m.last_use = self.clock;
        if self.cache.len() == CACHED_MAPS {
            let (i, _) = self
                .cache
                .iter()
                .enumerate()
                .min_by_key(|(_, m)| m.last_use)
                .unwrap();
            self.cache.swap_remove(i);
        }
        self.cache.push(m);
    }

    fn depth_of(&mut self, a: usize) -> usize {
        let h = self.hue_of(a);
        if let Some(m) = self.newest.as_ref().filter(|m| m.hue == h) {
            return m.get(&self.table, a);
        }
        self.clock += 1;
        let clock = self.clock;
        if let Some(m) = self.cache.iter_mut().find(|m| m.hue == h) {
            m.last_use = clock;
            return m.get(&self.table, a);
        }
        let mut m = self.build_map(h);
        let base = self.anchor_depth.get(h) as usize;
        self.fill_walk_from_s(h);
        for i in 0..self.walk.len {
            m.set(&self.table, self.walk.vertex(i), base + i);
        }
        let d = m.get(&self.table, a);
        self.stash(m);
        self.track_maps();
        d
    }
}
