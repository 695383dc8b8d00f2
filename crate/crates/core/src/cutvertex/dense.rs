//! Cut vertices from the fully marked edge table, O(n + m) bits.

use alloc::vec::Vec;

use super::marks::{EdgeMarkTable, Mark};
use crate::graph::Graph;
use crate::succinct::{BitVec, SpaceLedger};

/// A non-root vertex is a cut vertex iff some child edge is unmarked or
/// half marked; a root iff it has at least two children.
pub fn cut_vertices_dense(g: &Graph, ledger: &mut SpaceLedger) -> Vec<usize> {
    let emt = EdgeMarkTable::build(g, ledger);
    let out = cut_vertices_from_marks(g, &emt, ledger);
    let _ = ledger.release("emt", emt.bits());
    out
}

pub(crate) fn cut_vertices_from_marks(
    g: &Graph,
    emt: &EdgeMarkTable,
    ledger: &mut SpaceLedger,
) -> Vec<usize> {
    let mut cut = BitVec::zeros(g.n());
    ledger.register("cut.flags", cut.bits());
    for v in 0..g.n() {
        if let Some(ps) = emt.parent_slot(v) {
            if emt.mark_of(v, ps) != Mark::Full {
                cut.set(g.neighbor(v, ps), true);
            }
        }
    }
    // Roots were flagged above by any child; the child count decides instead.
    for v in 0..g.n() {
        if emt.is_root(v) {
            cut.set(v, emt.child_count(v) >= 2);
        }
    }
    let out = (0..g.n()).filter(|&v| cut.get(v)).collect();
    let _ = ledger.release("cut.flags", cut.bits());
    out
}
