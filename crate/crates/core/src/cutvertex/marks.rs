//! Per-slot DFS edge classification and tree-edge marks.

use alloc::vec::Vec;

use crate::graph::Graph;
use crate::succinct::{bits_for, BitVec, IntVector, SpaceLedger};

/// How a tree edge `{u, v}` (`u` the parent) is marked.
///
/// `Full`: some back edge leaves the subtree of `v` for a strict ancestor
/// of `u`. `Half`: otherwise, some back edge from that subtree reaches `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mark {
    Unmarked = 0,
    Half = 1,
    Full = 2,
}

impl Mark {
    fn from_bits(b: u64) -> Self {
        match b {
            0 => Mark::Unmarked,
            1 => Mark::Half,
            _ => Mark::Full,
        }
    }
}

pub(crate) const WHITE: u64 = 0;
pub(crate) const GRAY: u64 = 1;
pub(crate) const BLACK: u64 = 2;

const SLOT_BITS: u32 = 4;
const IS_TREE: u64 = 1;
const TO_PARENT: u64 = 2;
const MARK_SHIFT: u32 = 2;

/// Classification of every adjacency slot plus the parent slot of every
/// vertex.
///
/// Vertex `v` owns the `5 deg(v) + 1` bits from `5 flat(v, 0) + v` on: a
/// parent field (0 for a root, otherwise slot + 1) padded to `deg v + 1 ≥
/// bits_for(deg v)` bits, then 4 bits per slot. Positions follow from the
/// input's own offsets, so no field needs a select, and a vertex's parent
/// and slots usually share a cache line.
#[derive(Clone, Debug)]
pub struct EdgeMarkTable<'g> {
    g: &'g Graph,
    bits: BitVec,
}

impl<'g> EdgeMarkTable<'g> {
    fn empty(g: &'g Graph) -> Self {
        Self {
            g,
            bits: BitVec::zeros(5 * g.slots() + g.n()),
        }
    }

    /// Runs the classification DFS: roots are the smallest unvisited ids,
    /// slots are explored in ascending order. The DFS keeps no stack; it
    /// returns to a parent through the parent slot and resumes after the
    /// mate of that slot.
    pub fn classify(g: &'g Graph, ledger: &mut SpaceLedger) -> Self {
        let mut t = Self::empty(g);
        ledger.register("emt", t.bits());
        let mut color = IntVector::new(g.n(), 2);
        ledger.register("emt.color", color.bits());
        for r in 0..g.n() {
            if color.get(r) != WHITE {
                continue;
            }
            color.set(r, GRAY);
            let (mut v, mut i) = (r, 0);
            let mut pv = None;
            loop {
                if i < g.degree(v) {
                    let u = g.neighbor(v, i);
                    match color.get(u) {
                        WHITE => {
                            let j = g.mate(v, i);
                            t.set_slot(v, i, IS_TREE);
                            t.set_slot(u, j, IS_TREE | TO_PARENT);
                            t.set_parent(u, j);
                            color.set(u, GRAY);
                            (v, i, pv) = (u, 0, Some(j));
                            continue;
                        }
                        // The ancestor's slot stays zero (back edge down):
                        // it was not scanned yet, and when it is, `v` is black.
                        GRAY if pv != Some(i) => t.set_slot(v, i, TO_PARENT),
                        _ => {}
                    }
                    i += 1;
                } else {
                    color.set(v, BLACK);
                    let Some(ps) = pv else { break };
                    i = g.mate(v, ps) + 1;
                    v = g.neighbor(v, ps);
                    pv = t.parent_slot(v);
                }
            }
        }
        let _ = ledger.release("emt.color", color.bits());
        t
    }

    /// Classification followed by the marking pass.
    pub fn build(g: &'g Graph, ledger: &mut SpaceLedger) -> Self {
        let mut t = Self::classify(g, ledger);
        t.mark();
        t
    }

    /// Second DFS over tree edges. At the first visit of `u`, every back
    /// edge to a descendant `w` walks up from `w` marking tree edges full
    /// until the walk reaches `u` (that edge becomes half unless already
    /// full) or meets an edge that is already full.
    pub fn mark(&mut self) {
        let g = self.g;
        for r in 0..g.n() {
            if self.parent_slot(r).is_some() {
                continue;
            }
            self.mark_from(r);
            let (mut v, mut i) = (r, 0);
            loop {
                if i < g.degree(v) {
                    if self.is_child_slot(v, i) {
                        v = g.neighbor(v, i);
                        i = 0;
                        self.mark_from(v);
                        continue;
                    }
                    i += 1;
                } else {
                    let Some(ps) = self.parent_slot(v) else { break };
                    i = g.mate(v, ps) + 1;
                    v = g.neighbor(v, ps);
                }
            }
        }
    }

    fn mark_from(&mut self, u: usize) {
        let g = self.g;
        for i in 0..g.degree(u) {
            if !self.is_back_to_descendant(u, i) {
                continue;
            }
            let mut x = g.neighbor(u, i);
            loop {
                let ps = self.parent_slot(x).expect("descendant has a parent");
                if self.mark_of(x, ps) == Mark::Full {
                    break;
                }
                let p = g.neighbor(x, ps);
                self.set_mark(x, ps, if p == u { Mark::Half } else { Mark::Full });
                if p == u {
                    break;
                }
                x = p;
            }
        }
    }

    #[inline]
    fn base(&self, v: usize) -> usize {
        5 * self.g.flat(v, 0) + v
    }

    #[inline]
    fn slot_pos(&self, v: usize, i: usize) -> usize {
        self.base(v) + self.g.degree(v) + 1 + SLOT_BITS as usize * i
    }

    #[inline]
    fn slot(&self, v: usize, i: usize) -> u64 {
        self.bits.get_bits(self.slot_pos(v, i), SLOT_BITS)
    }

    #[inline]
    fn set_slot(&mut self, v: usize, i: usize, value: u64) {
        let p = self.slot_pos(v, i);
        self.bits.set_bits(p, SLOT_BITS, value)
    }

    fn set_mark(&mut self, v: usize, i: usize, m: Mark) {
        let g = self.g;
        for (x, k) in [(v, i), (g.neighbor(v, i), g.mate(v, i))] {
            let s = self.slot(x, k) & 3;
            self.set_slot(x, k, s | (m as u64) << MARK_SHIFT);
        }
    }

    fn set_parent(&mut self, v: usize, slot: usize) {
        let w = bits_for(self.g.degree(v) as u64);
        let p = self.base(v);
        self.bits.set_bits(p, w, slot as u64 + 1)
    }

    /// Slot of the tree edge from `v` to its parent, `None` for roots.
    #[inline]
    pub fn parent_slot(&self, v: usize) -> Option<usize> {
        let w = bits_for(self.g.degree(v) as u64);
        (self.bits.get_bits(self.base(v), w) as usize).checked_sub(1)
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent_slot(v).map(|ps| self.g.neighbor(v, ps))
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.parent_slot(v).is_none()
    }

    #[inline]
    pub fn is_tree(&self, v: usize, i: usize) -> bool {
        self.slot(v, i) & IS_TREE != 0
    }

    /// Whether the other endpoint of slot `(v, i)` is closer to the root.
    #[inline]
    pub fn to_parent(&self, v: usize, i: usize) -> bool {
        self.slot(v, i) & TO_PARENT != 0
    }

    /// Tree edge from `v` down to a child.
    #[inline]
    pub fn is_child_slot(&self, v: usize, i: usize) -> bool {
        self.slot(v, i) & (IS_TREE | TO_PARENT) == IS_TREE
    }

    /// Back edge from `v` up to a proper ancestor.
    #[inline]
    pub fn is_back_to_ancestor(&self, v: usize, i: usize) -> bool {
        self.slot(v, i) & (IS_TREE | TO_PARENT) == TO_PARENT
    }

    #[inline]
    pub fn is_back_to_descendant(&self, v: usize, i: usize) -> bool {
        self.slot(v, i) & (IS_TREE | TO_PARENT) == 0
    }

    /// Mark of a tree slot; back slots read as `Unmarked`.
    #[inline]
    pub fn mark_of(&self, v: usize, i: usize) -> Mark {
        Mark::from_bits(self.slot(v, i) >> MARK_SHIFT)
    }

    /// Number of tree children of `v`.
    pub fn child_count(&self, v: usize) -> usize {
        (0..self.g.degree(v)).filter(|&i| self.is_child_slot(v, i)).count()
    }

    /// `(parent, child, mark)` for every tree edge, ordered by child.
    pub fn tree_edges(&self) -> Vec<(usize, usize, Mark)> {
        (0..self.g.n())
            .filter_map(|v| {
                let ps = self.parent_slot(v)?;
                Some((self.g.neighbor(v, ps), v, self.mark_of(v, ps)))
            })
            .collect()
    }

    pub fn bits(&self) -> u64 {
        self.bits.bits()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn triangle_trace() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let t = EdgeMarkTable::build(&g, &mut SpaceLedger::new());
        assert!(t.is_root(0));
        assert_eq!(t.parent(1), Some(0));
        assert_eq!(t.parent(2), Some(1));
        // Slot 1 of vertex 2 is the back edge to 0.
        assert!(t.is_back_to_ancestor(2, 1));
        assert!(t.is_back_to_descendant(0, 1));
        assert_eq!(
            t.tree_edges(),
            [(0, 1, Mark::Half), (1, 2, Mark::Full)]
        );
    }

    #[test]
    fn path_is_unmarked_forest() {
        let g = graph(3, &[(0, 1), (1, 2)]);
        let t = EdgeMarkTable::build(&g, &mut SpaceLedger::new());
        assert!(t.tree_edges().iter().all(|e| e.2 == Mark::Unmarked));
        let tree_slots = (0..3)
            .flat_map(|v| (0..g.degree(v)).map(move |i| (v, i)))
            .filter(|&(v, i)| t.is_tree(v, i))
            .count();
        assert_eq!(tree_slots, 4);
    }

    #[test]
    fn marks_agree_at_both_ends() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        let t = EdgeMarkTable::build(&g, &mut SpaceLedger::new());
        for v in 0..5 {
            for i in 0..g.degree(v) {
                let (u, j) = (g.neighbor(v, i), g.mate(v, i));
                assert_eq!(t.mark_of(v, i), t.mark_of(u, j));
                assert_eq!(t.is_tree(v, i), t.is_tree(u, j));
            }
        }
    }

    #[test]
    fn isolated_vertices_are_roots() {
        let g = graph(3, &[]);
        let t = EdgeMarkTable::build(&g, &mut SpaceLedger::new());
        assert!((0..3).all(|v| t.is_root(v)));
        assert!(t.tree_edges().is_empty());
    }
}
