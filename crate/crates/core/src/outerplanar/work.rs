//! The shrinking graph `G'` and the chain operations on it.
//!
//! One `WorkGraph` spans the whole input and is reused for every
//! biconnected component; a component leaves no trace behind once it has
//! been accepted. Edges of `G'` are either original (a live slot in the
//! per-vertex dictionary `C_v`) or artificial (kept in a ragged dictionary
//! keyed by endpoint). Shortcuts live in a second ragged dictionary.

use super::{Observer, Rejection};
use crate::graph::Graph;
use crate::succinct::{
    bits_for, ceil_log2, BitVec, ChoiceDictionary, ChoiceDictionaryFamily, IntVector,
    RaggedDictionary, RecordArray, SpaceLedger,
};

const NONE: usize = usize::MAX;

/// How one side of `G'` is reached from a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Link {
    /// Original edge at this adjacency slot.
    Orig(usize),
    Art,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Chain {
    pub u: usize,
    pub w: usize,
    /// Inner vertex next to `u`, and the one next to `w`.
    pub first: usize,
    pub last: usize,
    pub cycle: bool,
    /// Phase 1: some inner vertex is marked tried.
    pub tried: bool,
}

/// Side effect of a chain walk on the vertices it visits.
#[derive(Clone, Copy)]
pub(crate) enum Touch {
    Nothing,
    Mark,
    /// Look for tried vertices and drop the visited vertices from `D`.
    CheckDrain,
}

enum End {
    Cycle,
    At { end: usize, prev: usize },
}

pub(crate) struct WorkGraph<'g> {
    g: &'g Graph,
    alive: ChoiceDictionary,
    slots: ChoiceDictionaryFamily,
    deg: RecordArray,
    pub(crate) tried: BitVec,
    has_aux: BitVec,
    pcnt: IntVector,
    pub(crate) queue: ChoiceDictionary,
    art: RaggedDictionary,
    sc: RaggedDictionary,
    idw: u32,
    /// Component size and live edge count of `G'`.
    pub(crate) n_c: usize,
    pub(crate) m_c: usize,
    pub(crate) edges: usize,
    pub(crate) aux_live: usize,
    pub(crate) aux_cap: usize,
}

/// `⌈n / ⌈log2 n⌉⌉`, the closed-chain budget after Phase 1.
pub(crate) fn chain_budget(n: usize) -> usize {
    n.div_ceil((ceil_log2(n as u64) as usize).max(1))
}

impl<'g> WorkGraph<'g> {
    /// With `bounded_aux` the ragged dictionaries hold `4⌈n/⌈log2 n⌉⌉ + 8`
    /// entries each, otherwise one per vertex.
    pub(crate) fn new(g: &'g Graph, bounded_aux: bool, ledger: &mut SpaceLedger) -> Self {
        let n = g.n();
        let idw = bits_for(n as u64);
        let kappa = if bounded_aux { 4 * chain_budget(n) + 8 } else { n };
        let wg = Self {
            g,
            alive: ChoiceDictionary::new(n),
            slots: ChoiceDictionaryFamily::new((0..n).map(|v| g.degree(v))),
            deg: RecordArray::new((0..n).map(|v| bits_for(g.degree(v) as u64) as usize)),
            tried: BitVec::zeros(n),
            has_aux: BitVec::zeros(n),
            pcnt: IntVector::new(g.slots(), 2),
            queue: ChoiceDictionary::new(n),
            art: RaggedDictionary::new(n, kappa, 2 * idw + 4),
            sc: RaggedDictionary::new(n, kappa, 2 * idw),
            idw,
            n_c: 0,
            m_c: 0,
            edges: 0,
            aux_live: 0,
            aux_cap: 0,
        };
        ledger.register("op.alive", wg.alive.bits());
        ledger.register("op.slots", wg.slots.bits());
        ledger.register("op.deg", wg.deg.bits());
        ledger.register("op.flags", wg.tried.bits() + wg.has_aux.bits());
        ledger.register("op.pcnt", wg.pcnt.bits());
        ledger.register("op.queue", wg.queue.bits());
        ledger.register("op.aux", wg.art.bits() + wg.sc.bits());
        wg
    }

    pub(crate) fn release(self, ledger: &mut SpaceLedger) {
        let _ = ledger.release("op.alive", self.alive.bits());
        let _ = ledger.release("op.slots", self.slots.bits());
        let _ = ledger.release("op.deg", self.deg.bits());
        let _ = ledger.release("op.flags", self.tried.bits() + self.has_aux.bits());
        let _ = ledger.release("op.pcnt", self.pcnt.bits());
        let _ = ledger.release("op.queue", self.queue.bits());
        let _ = ledger.release("op.aux", self.art.bits() + self.sc.bits());
    }

    // ---- degrees and adjacency -------------------------------------------

    /// The field of `v` is `bits_for(deg_G v)` wide, so its width comes
    /// from the input graph.
    #[inline]
    pub(crate) fn degree(&self, v: usize) -> usize {
        let w = bits_for(self.g.degree(v) as u64);
        self.deg.get(self.deg.start(v), w) as usize
    }

    #[inline]
    fn set_degree(&mut self, v: usize, d: usize) {
        let w = bits_for(self.g.degree(v) as u64);
        let s = self.deg.start(v);
        self.deg.set(s, w, d as u64);
    }

    #[inline]
    pub(crate) fn is_alive(&self, v: usize) -> bool {
        self.alive.contains(v)
    }

    pub(crate) fn next_alive(&self, from: usize) -> Option<usize> {
        self.alive.successor(from)
    }

    /// Adds the original edge given by its two slots.
    pub(crate) fn load_edge(&mut self, a: (usize, usize), b: (usize, usize)) {
        for (v, i) in [a, b] {
            if self.alive.insert(v) {
                self.n_c += 1;
            }
            self.slots.insert(v, i);
            let d = self.degree(v);
            self.set_degree(v, d + 1);
        }
        self.m_c += 1;
        self.edges += 1;
    }

    /// Up to `cap` neighbours of `v` in `G'`, original edges first.
    fn neighbours(&self, v: usize, out: &mut [(usize, Link)]) -> usize {
        let mut k = 0;
        for s in self.slots.iter(v).take(out.len()) {
            out[k] = (self.g.neighbor(v, s), Link::Orig(s));
            k += 1;
        }
        if self.has_aux.get(v) {
            for p in self.art_partners(v).into_iter().flatten() {
                if k < out.len() {
                    out[k] = (p.0, Link::Art);
                    k += 1;
                }
            }
        }
        k
    }

    /// Both neighbours of a degree-2 vertex.
    #[inline]
    fn pair(&self, v: usize) -> [(usize, Link); 2] {
        let mut out = [(NONE, Link::Art); 2];
        let k = self.neighbours(v, &mut out);
        debug_assert_eq!(k, 2, "vertex {v} is not of degree 2");
        out
    }

    /// The neighbour of degree-2 vertex `c` other than `p`.
    #[inline]
    fn other(&self, c: usize, p: usize) -> (usize, Link) {
        let [a, b] = self.pair(c);
        if a.0 == p {
            b
        } else {
            a
        }
    }

    fn link_to(&self, c: usize, x: usize) -> Link {
        let [a, b] = self.pair(c);
        if a.0 == x {
            a.1
        } else {
            debug_assert_eq!(b.0, x);
            b.1
        }
    }

    /// Counts the degree-2 neighbours of `v` (current degree at most 4),
    /// optionally queueing them.
    fn degree_two_neighbours(&mut self, v: usize, enqueue: bool) -> Result<(), Rejection> {
        let mut nb = [(NONE, Link::Art); 4];
        let k = self.neighbours(v, &mut nb);
        let mut count = 0;
        for &(x, _) in &nb[..k] {
            if self.degree(x) == 2 {
                count += 1;
                if enqueue {
                    self.queue.insert(x);
                }
            }
        }
        if count >= 3 {
            return Err(Rejection::ThreeDegreeTwoNeighbors { vertex: v });
        }
        Ok(())
    }

    // ---- auxiliary records ------------------------------------------------

    fn art_unpack(&self, sat: u64) -> [Option<(usize, u8)>; 2] {
        let w = self.idw;
        let mask = (1u64 << w) - 1;
        let a1 = (sat & mask) as usize;
        let a2 = (sat >> w & mask) as usize;
        let p1 = (sat >> (2 * w) & 3) as u8;
        let p2 = (sat >> (2 * w + 2) & 3) as u8;
        [(a1 > 0).then(|| (a1 - 1, p1)), (a2 > 0).then(|| (a2 - 1, p2))]
    }

    fn art_pack(&self, e: [Option<(usize, u8)>; 2]) -> u64 {
        let w = self.idw;
        let f = |x: Option<(usize, u8)>| x.map_or((0, 0), |(a, p)| (a as u64 + 1, p as u64));
        let (a1, p1) = f(e[0]);
        let (a2, p2) = f(e[1]);
        a1 | a2 << w | p1 << (2 * w) | p2 << (2 * w + 2)
    }

    fn art_partners(&self, v: usize) -> [Option<(usize, u8)>; 2] {
        self.art.get(v).map_or([None, None], |s| self.art_unpack(s))
    }

    fn art_write(&mut self, v: usize, e: [Option<(usize, u8)>; 2]) -> Result<(), Rejection> {
        if e[0].is_none() && e[1].is_none() {
            let _ = self.art.remove(v);
        } else {
            let sat = self.art_pack(e);
            self.art
                .insert(v, sat)
                .map_err(|_| Rejection::AuxCapacityExceeded { limit: self.aux_cap })?;
        }
        self.sync_aux(v);
        Ok(())
    }

    fn sync_aux(&mut self, v: usize) {
        let has = self.art.contains(v) || self.sc.contains(v);
        self.has_aux.set(v, has);
    }

    fn art_p(&self, v: usize, x: usize) -> Option<u8> {
        self.art_partners(v).into_iter().flatten().find(|e| e.0 == x).map(|e| e.1)
    }

    fn art_set(&mut self, v: usize, x: usize, p: Option<u8>) -> Result<(), Rejection> {
        let mut e = self.art_partners(v);
        let pos = e.iter().position(|s| s.is_some_and(|s| s.0 == x));
        match (pos, p) {
            (Some(i), Some(p)) => e[i] = Some((x, p)),
            (Some(i), None) => e[i] = None,
            (None, Some(p)) => {
                let free = e
                    .iter()
                    .position(Option::is_none)
                    .ok_or(Rejection::ArtificialOverflow { vertex: v })?;
                e[free] = Some((x, p));
            }
            (None, None) => {}
        }
        self.art_write(v, e)
    }

    fn shortcut(&self, v: usize) -> Option<(usize, usize)> {
        if !self.has_aux.get(v) {
            return None;
        }
        let s = self.sc.get(v)?;
        let mask = (1u64 << self.idw) - 1;
        Some(((s & mask) as usize, (s >> self.idw & mask) as usize))
    }

    /// Deletes the shortcut held by `v` together with its partner entry.
    fn drop_shortcut(&mut self, v: usize) {
        if let Some((t, _)) = self.shortcut(v) {
            let _ = self.sc.remove(v);
            self.sync_aux(v);
            if t != v {
                let _ = self.sc.remove(t);
                self.sync_aux(t);
            }
            self.aux_live -= 1;
        }
    }

    fn set_shortcut(&mut self, v: usize, target: usize, inward: usize) -> Result<(), Rejection> {
        let sat = target as u64 | (inward as u64) << self.idw;
        self.sc
            .insert(v, sat)
            .map_err(|_| Rejection::AuxCapacityExceeded { limit: self.aux_cap })?;
        self.has_aux.set(v, true);
        Ok(())
    }

    fn grow_aux(&mut self, obs: &mut impl Observer) -> Result<(), Rejection> {
        self.aux_live += 1;
        obs.aux_live(self.aux_live);
        if self.aux_live > self.aux_cap {
            return Err(Rejection::AuxCapacityExceeded { limit: self.aux_cap });
        }
        Ok(())
    }

    // ---- path counters ----------------------------------------------------

    fn p_of(&self, c: usize, x: usize, link: Link) -> u8 {
        match link {
            Link::Orig(i) => self.pcnt.get(self.g.flat(c, i)) as u8,
            Link::Art => self.art_p(c, x).expect("artificial edge recorded at both ends"),
        }
    }

    /// `P += 1` on the edge `c–x`; fails when it passes 2.
    fn bump(&mut self, c: usize, x: usize, link: Link) -> Result<u8, Rejection> {
        let p = self.p_of(c, x, link) + 1;
        if p > 2 {
            return Err(Rejection::PathCountExceeded { u: c.min(x), v: c.max(x) });
        }
        match link {
            Link::Orig(i) => {
                self.pcnt.set(self.g.flat(c, i), p as u64);
                let j = self.g.mate(c, i);
                self.pcnt.set(self.g.flat(x, j), p as u64);
            }
            Link::Art => {
                self.art_set(c, x, Some(p))?;
                self.art_set(x, c, Some(p))?;
            }
        }
        Ok(p)
    }

    /// Deletes edge `c–x` from `G'` after a last increment of its counter.
    fn retire(&mut self, c: usize, x: usize, link: Link, obs: &mut impl Observer) -> Result<(), Rejection> {
        let p = self.bump(c, x, link)?;
        obs.edge_retired(c, x, p, link == Link::Art);
        self.unlink(c, x, link)?;
        self.edges -= 1;
        Ok(())
    }

    fn unlink(&mut self, c: usize, x: usize, link: Link) -> Result<(), Rejection> {
        match link {
            Link::Orig(i) => {
                let j = self.g.mate(c, i);
                self.pcnt.set(self.g.flat(c, i), 0);
                self.pcnt.set(self.g.flat(x, j), 0);
                self.slots.remove(c, i);
                self.slots.remove(x, j);
            }
            Link::Art => {
                self.art_set(c, x, None)?;
                self.art_set(x, c, None)?;
                self.aux_live -= 1;
            }
        }
        Ok(())
    }

    fn kill(&mut self, v: usize) {
        self.drop_shortcut(v);
        self.alive.remove(v);
        self.queue.remove(v);
        self.tried.set(v, false);
        self.set_degree(v, 0);
        self.n_c -= 1;
    }

    // ---- chains -----------------------------------------------------------

    /// Walks from degree-2 vertex `s` away from `p0`. Returns where the
    /// walk stops and whether a tried vertex was seen.
    fn walk(&mut self, s: usize, p0: usize, shortcuts: bool, touch: Touch) -> (End, bool) {
        let (mut p, mut c) = (p0, s);
        let mut tried = false;
        let mut steps = 0usize;
        loop {
            tried |= self.touch(c, touch);
            if shortcuts {
                if let Some((t, i)) = self.shortcut(c) {
                    if t != c && p != i {
                        let (_, it) = self.shortcut(t).expect("shortcut pairs are symmetric");
                        c = t;
                        p = it;
                        if c == s {
                            return (End::Cycle, tried);
                        }
                        tried |= self.touch(c, touch);
                    }
                }
            }
            let (nx, _) = self.other(c, p);
            p = c;
            c = nx;
            if c == s {
                return (End::Cycle, tried);
            }
            if self.degree(c) != 2 {
                return (End::At { end: c, prev: p }, tried);
            }
            steps += 1;
            debug_assert!(steps <= self.g.n(), "chain walk does not terminate");
        }
    }

    #[inline]
    fn touch(&mut self, c: usize, touch: Touch) -> bool {
        match touch {
            Touch::Nothing => false,
            Touch::Mark => {
                self.tried.set(c, true);
                false
            }
            Touch::CheckDrain => {
                self.queue.remove(c);
                self.tried.get(c)
            }
        }
    }

    /// The chain through degree-2 vertex `s`.
    pub(crate) fn find_chain(&mut self, s: usize, shortcuts: bool, touch: Touch) -> Result<Chain, Rejection> {
        let [(a, _), (b, _)] = self.pair(s);
        let (end, tried_a) = self.walk(s, b, shortcuts, touch);
        let (u, first) = match end {
            End::Cycle => {
                let t = a.min(b);
                let first = if t == a { b } else { a };
                let (last, _) = self.other(t, s);
                return Ok(Chain { u: s, w: t, first, last, cycle: true, tried: tried_a });
            }
            End::At { end, prev } => (end, prev),
        };
        let (end, tried_b) = self.walk(s, a, shortcuts, touch);
        let End::At { end: w, prev: last } = end else {
            unreachable!("one direction ended at an endpoint")
        };
        if u == w {
            return Err(Rejection::LoopDetected { vertex: u });
        }
        for e in [u, w] {
            if self.degree(e) <= 4 {
                self.degree_two_neighbours(e, false)?;
            }
        }
        Ok(Chain { u, w, first, last, cycle: false, tried: tried_a || tried_b })
    }

    pub(crate) fn is_good(&self, c: &Chain) -> bool {
        c.cycle || self.degree(c.u).min(self.degree(c.w)) <= 4
    }

    /// The original edge `u–w`, found from the endpoint of lower degree.
    /// Artificial edges never close a chain.
    pub(crate) fn closing(&self, c: &Chain) -> Option<(usize, usize, Link)> {
        if c.cycle {
            return Some((c.u, c.w, self.link_to(c.u, c.w)));
        }
        let (x, y) = if self.degree(c.u) <= self.degree(c.w) { (c.u, c.w) } else { (c.w, c.u) };
        let mut i = 0;
        while let Some(s) = self.slots.successor(x, i) {
            if self.g.neighbor(x, s) == y {
                return Some((x, y, Link::Orig(s)));
            }
            i = s + 1;
        }
        None
    }

    /// Retires every edge of the chain and deletes its inner vertices. The
    /// endpoints each lose one degree.
    fn strip(&mut self, c: &Chain, obs: &mut impl Observer) -> Result<(), Rejection> {
        let mut p = c.u;
        let mut x = c.first;
        let l = self.link_to(x, p);
        self.retire(x, p, l, obs)?;
        loop {
            // x still has exactly one edge left, towards the next vertex.
            let mut nb = [(NONE, Link::Art); 1];
            self.neighbours(x, &mut nb);
            let (nx, l) = nb[0];
            debug_assert_ne!(nx, p);
            self.retire(x, nx, l, obs)?;
            self.kill(x);
            if nx == c.w {
                break;
            }
            p = x;
            x = nx;
        }
        for e in [c.u, c.w] {
            let d = self.degree(e);
            self.set_degree(e, d - 1);
        }
        Ok(())
    }

    /// Removes a closed (or cycle) chain and counts the face on its closing
    /// edge.
    pub(crate) fn remove_closed(
        &mut self,
        c: &Chain,
        closing: (usize, usize, Link),
        obs: &mut impl Observer,
    ) -> Result<(), Rejection> {
        self.strip(c, obs)?;
        let (x, y, l) = closing;
        self.bump(x, y, l)?;
        self.collapse_check(c.u)?;
        self.collapse_check(c.w)
    }

    /// Replaces a good open chain by an artificial edge, or merges it into
    /// the artificial edge its endpoints already share.
    pub(crate) fn replace_with_artificial(&mut self, c: &Chain, obs: &mut impl Observer) -> Result<bool, Rejection> {
        self.strip(c, obs)?;
        if self.art_p(c.u, c.w).is_some() {
            self.bump(c.u, c.w, Link::Art)?;
            self.collapse_check(c.u)?;
            self.collapse_check(c.w)?;
            return Ok(true);
        }
        self.art_set(c.u, c.w, Some(1))?;
        self.art_set(c.w, c.u, Some(1))?;
        for e in [c.u, c.w] {
            let d = self.degree(e);
            self.set_degree(e, d + 1);
        }
        self.edges += 1;
        self.grow_aux(obs)?;
        Ok(false)
    }

    /// Links the two ends of a chain that is not good. Older shortcuts inside
    /// it are deleted and all its vertices leave `D`.
    pub(crate) fn install_shortcut(&mut self, c: &Chain, obs: &mut impl Observer) -> Result<(), Rejection> {
        let (mut p, mut x) = (c.u, c.first);
        loop {
            self.queue.remove(x);
            if let Some((t, i)) = self.shortcut(x) {
                let jump = (t != x && p != i).then(|| (t, self.shortcut(t).unwrap().1));
                self.drop_shortcut(x);
                if let Some((t, it)) = jump {
                    x = t;
                    p = it;
                    self.queue.remove(x);
                }
            }
            if x == c.last {
                break;
            }
            let (nx, _) = self.other(x, p);
            p = x;
            x = nx;
        }
        if c.first == c.last {
            self.set_shortcut(c.first, c.first, c.first)?;
        } else {
            let (inf, _) = self.other(c.first, c.u);
            let (inl, _) = self.other(c.last, c.w);
            self.set_shortcut(c.first, c.last, inf)?;
            self.set_shortcut(c.last, c.first, inl)?;
        }
        obs.shortcut(c.first, c.last);
        self.grow_aux(obs)
    }

    /// After a removal: a vertex left with one edge while others remain
    /// means `G'` fell apart.
    fn collapse_check(&self, v: usize) -> Result<(), Rejection> {
        if self.degree(v) <= 1 && self.edges > 1 {
            return Err(Rejection::DegreeCollapse { vertex: v });
        }
        Ok(())
    }

    /// Phase 2 reaction to a lowered degree at `v`.
    pub(crate) fn degree_dropped(&mut self, v: usize) -> Result<(), Rejection> {
        match self.degree(v) {
            2 => {
                self.queue.insert(v);
                Ok(())
            }
            3 | 4 => self.degree_two_neighbours(v, true),
            _ => Ok(()),
        }
    }

    // ---- component lifecycle ----------------------------------------------

    /// The single remaining edge.
    pub(crate) fn last_edge(&self) -> Option<(usize, usize, Link)> {
        let u = self.alive.choice()?;
        let mut nb = [(NONE, Link::Art); 1];
        (self.neighbours(u, &mut nb) == 1).then(|| (u, nb[0].0, nb[0].1))
    }

    pub(crate) fn finish_component(&mut self, obs: &mut impl Observer) {
        debug_assert_eq!(self.edges, 1);
        if let Some((u, w, l)) = self.last_edge() {
            obs.edge_retired(u, w, self.p_of(u, w, l), l == Link::Art);
            let _ = self.unlink(u, w, l);
        }
        while let Some(v) = self.alive.choice() {
            self.kill(v);
        }
        self.queue.clear();
        self.edges = 0;
        self.m_c = 0;
        self.n_c = 0;
        self.aux_live = 0;
    }
}
