//! Biconnected components streamed from the marked DFS tree.
//!
//! After marking, one rank-select structure over all adjacency slots flags
//! the full tree edges to children and the back edges to ancestors. The
//! block of a tree edge is found by walking up while edges are full to the
//! head edge `{u, v}`; the block is `u` plus everything reached from `v`
//! downwards through full tree edges, with their back edges to ancestors.

use alloc::vec::Vec;

use crate::cutvertex::{EdgeMarkTable, Mark};
use crate::graph::{EdgeRef, Graph};
use crate::succinct::{BitVec, ChoiceDictionary, RankSelect, SpaceLedger};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Vertices,
    Edges,
    Both,
}

impl Mode {
    fn vertices(self) -> bool {
        self != Mode::Edges
    }
    fn edges(self) -> bool {
        self != Mode::Vertices
    }
}

/// One streamed item. Edges carry both endpoint slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Item {
    Vertex(usize),
    Edge(EdgeRef, EdgeRef),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum BccError {
    #[error("no slot {slot} at vertex {vertex}")]
    InvalidEdge { vertex: usize, slot: usize },
}

/// Collected output of one component.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub edges: Vec<(EdgeRef, EdgeRef)>,
}

impl Component {
    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .map(|(a, b)| (a.vertex.min(b.vertex), a.vertex.max(b.vertex)))
            .collect();
        out.sort_unstable();
        out
    }
}

pub struct BccIndex<'g> {
    g: &'g Graph,
    emt: EdgeMarkTable<'g>,
    flags: RankSelect,
}

impl<'g> BccIndex<'g> {
    pub fn build(g: &'g Graph, ledger: &mut SpaceLedger) -> Self {
        let emt = EdgeMarkTable::build(g, ledger);
        let mut bits = BitVec::zeros(g.slots());
        for v in 0..g.n() {
            for i in 0..g.degree(v) {
                let full_child = emt.is_child_slot(v, i) && emt.mark_of(v, i) == Mark::Full;
                if full_child || emt.is_back_to_ancestor(v, i) {
                    bits.set(g.flat(v, i), true);
                }
            }
        }
        let flags = RankSelect::new(bits);
        ledger.register("bcc.flags", flags.bits());
        Self { g, emt, flags }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn marks(&self) -> &EdgeMarkTable<'g> {
        &self.emt
    }

    /// Flagged slots of `v`: full child edges and back edges to ancestors.
    pub fn flagged(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let base = self.g.flat(v, 0);
        let lo = self.flags.rank_unchecked(base);
        let hi = self.flags.rank_unchecked(base + self.g.degree(v));
        (lo + 1..=hi).map(move |k| self.flags.select_unchecked(k) - 1 - base)
    }

    pub fn release(self, ledger: &mut SpaceLedger) {
        let _ = ledger.release("bcc.flags", self.flags.bits());
        let _ = ledger.release("emt", self.emt.bits());
    }

    pub fn bits(&self) -> u64 {
        self.flags.bits() + self.emt.bits()
    }

    /// The head edge of the block containing slot `e`, as the child end.
    fn head(&self, e: EdgeRef) -> (usize, usize) {
        let g = self.g;
        let (mut c, mut ps) = if self.emt.is_tree(e.vertex, e.slot) {
            if self.emt.to_parent(e.vertex, e.slot) {
                (e.vertex, e.slot)
            } else {
                let t = g.twin(e);
                (t.vertex, t.slot)
            }
        } else {
            // A back edge lies in the block of the tree edge above its lower end.
            let low = if self.emt.to_parent(e.vertex, e.slot) { e.vertex } else { g.neighbor(e.vertex, e.slot) };
            (low, self.emt.parent_slot(low).expect("lower end of a back edge has a parent"))
        };
        while self.emt.mark_of(c, ps) == Mark::Full {
            c = g.neighbor(c, ps);
            ps = self.emt.parent_slot(c).expect("a full edge never ends at a root");
        }
        (c, ps)
    }

    /// Streams the block containing the edge at slot `e`. Every vertex and
    /// every edge is reported once; the time is linear in the output.
    pub fn component_of(
        &self,
        e: EdgeRef,
        mode: Mode,
        mut f: impl FnMut(Item),
    ) -> Result<(), BccError> {
        let g = self.g;
        if e.vertex >= g.n() || e.slot >= g.degree(e.vertex) {
            return Err(BccError::InvalidEdge { vertex: e.vertex, slot: e.slot });
        }
        let (v, ps) = self.head(e);
        let u = g.neighbor(v, ps);
        if mode.vertices() {
            f(Item::Vertex(u));
        }
        if mode.edges() {
            f(Item::Edge(EdgeRef::new(u, g.mate(v, ps)), EdgeRef::new(v, ps)));
        }
        // Stackless DFS below v through flagged child slots.
        let (mut x, mut k) = (v, self.first_flag(v));
        if mode.vertices() {
            f(Item::Vertex(v));
        }
        loop {
            let end = self.end_flag(x);
            if k < end {
                let i = self.flags.select_unchecked(k + 1) - 1 - g.flat(x, 0);
                k += 1;
                if self.emt.is_child_slot(x, i) {
                    let y = g.neighbor(x, i);
                    if mode.vertices() {
                        f(Item::Vertex(y));
                    }
                    if mode.edges() {
                        f(Item::Edge(EdgeRef::new(x, i), EdgeRef::new(y, g.mate(x, i))));
                    }
                    x = y;
                    k = self.first_flag(y);
                } else if mode.edges() {
                    f(Item::Edge(EdgeRef::new(x, i), g.twin(EdgeRef::new(x, i))));
                }
                continue;
            }
            if x == v {
                break;
            }
            let ps = self.emt.parent_slot(x).unwrap();
            let p = g.neighbor(x, ps);
            k = self.flags.rank_unchecked(g.flat(p, g.mate(x, ps)) + 1);
            x = p;
        }
        Ok(())
    }

    #[inline]
    fn first_flag(&self, v: usize) -> usize {
        self.flags.rank_unchecked(self.g.flat(v, 0))
    }

    #[inline]
    fn end_flag(&self, v: usize) -> usize {
        self.flags.rank_unchecked(self.g.flat(v, 0) + self.g.degree(v))
    }

    pub fn collect_component(&self, e: EdgeRef, mode: Mode) -> Result<Component, BccError> {
        let mut c = Component::default();
        self.component_of(e, mode, |it| match it {
            Item::Vertex(v) => c.vertices.push(v),
            Item::Edge(a, b) => c.edges.push((a, b)),
        })?;
        Ok(c)
    }

    /// Slot of `u` at `v`, if `{u, v}` is an edge.
    pub fn edge(&self, u: usize, v: usize) -> Option<EdgeRef> {
        if u >= self.g.n() || v >= self.g.n() {
            return None;
        }
        self.g.find_slot(u, v).map(|i| EdgeRef::new(u, i))
    }

    pub fn enumerate(&self, ledger: &mut SpaceLedger) -> Enumerator<'_, 'g> {
        let mut left = ChoiceDictionary::new(self.g.slots());
        for p in 0..self.g.slots() {
            left.insert(p);
        }
        ledger.register("bcc.enum", left.bits());
        Enumerator { idx: self, left, next_id: 0 }
    }
}

/// Blocks in discovery order: repeatedly the block of the lowest remaining
/// adjacency slot.
pub struct Enumerator<'a, 'g> {
    idx: &'a BccIndex<'g>,
    left: ChoiceDictionary,
    next_id: usize,
}

impl Enumerator<'_, '_> {
    /// Streams the next block; returns its id, or `None` when all edges
    /// have been reported.
    pub fn next_component(&mut self, mode: Mode, mut f: impl FnMut(Item)) -> Option<usize> {
        let p = self.left.choice()?;
        let g = self.idx.g;
        let e = g.unflat(p);
        let left = &mut self.left;
        self.idx
            .component_of(e, Mode::Both, |it| {
                if let Item::Edge(a, b) = it {
                    left.remove(g.flat(a.vertex, a.slot));
                    left.remove(g.flat(b.vertex, b.slot));
                    if mode.edges() {
                        f(it);
                    }
                } else if mode.vertices() {
                    f(it);
                }
            })
            .expect("slot taken from the dictionary is valid");
        let id = self.next_id;
        self.next_id += 1;
        Some(id)
    }

    pub fn release(self, ledger: &mut SpaceLedger) {
        let _ = ledger.release("bcc.enum", self.left.bits());
    }
}

/// All blocks, collected.
pub fn bcc_all(g: &Graph, ledger: &mut SpaceLedger) -> Vec<Component> {
    let idx = BccIndex::build(g, ledger);
    let mut en = idx.enumerate(ledger);
    let mut out = Vec::new();
    loop {
        let mut c = Component::default();
        let got = en.next_component(Mode::Both, |it| match it {
            Item::Vertex(v) => c.vertices.push(v),
            Item::Edge(a, b) => c.edges.push((a, b)),
        });
        if got.is_none() {
            break;
        }
        out.push(c);
    }
    en.release(ledger);
    idx.release(ledger);
    out
}
