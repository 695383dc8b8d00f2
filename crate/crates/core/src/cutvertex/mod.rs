//! Cut vertices through DFS edge marking.
//!
//! Two engines share the same DFS order (roots are the smallest unvisited
//! ids, slots ascending): the dense engine keeps a mark per edge slot, the
//! sparse engine keeps O(log log n) bits per vertex and segmented stacks.

mod dense;
mod depth;
mod marks;
mod segstack;
mod sparse;

use alloc::vec::Vec;

pub use dense::cut_vertices_dense;
pub use marks::{EdgeMarkTable, Mark};
pub use sparse::{
    assign_hues, cut_vertices_sparse, cut_vertices_sparse_with, default_segment_size,
    SparseOptions, SparseStats,
};


use crate::graph::Graph;
use crate::succinct::{ceil_log2, SpaceLedger};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Dense,
    Sparse,
    /// Dense when `m ≤ n·⌈log2 log2 n⌉`, sparse otherwise.
    Auto,
}

impl Engine {
    pub fn resolve(self, n: usize, m: usize) -> Engine {
        match self {
            Engine::Auto => {
                let ll = ceil_log2(ceil_log2(n as u64) as u64) as usize;
                if m <= n * ll {
                    Engine::Dense
                } else {
                    Engine::Sparse
                }
            }
            e => e,
        }
    }
}

/// Cut vertices in ascending order.
pub fn cut_vertices(g: &Graph, engine: Engine, ledger: &mut SpaceLedger) -> Vec<usize> {
    match engine.resolve(g.n(), g.m()) {
        Engine::Dense => cut_vertices_dense(g, ledger),
        _ => cut_vertices_sparse(g, ledger),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
        let g = Graph::from_edges(n, edges).unwrap();
        let d = cut_vertices_dense(&g, &mut SpaceLedger::new());
        let s = cut_vertices_sparse(&g, &mut SpaceLedger::new());
        assert_eq!(d, s);
        d
    }

    #[test]
    fn small_shapes() {
        assert_eq!(both(3, &[(0, 1), (1, 2)]), [1]);
        assert!(both(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).is_empty());
        let bowtie = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)];
        assert_eq!(both(5, &bowtie), [2]);
        assert!(both(0, &[]).is_empty());
        assert!(both(1, &[]).is_empty());
        assert_eq!(both(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]), [1, 4]);
    }

    #[test]
    fn hues_follow_visit_order() {
        let mut l = SpaceLedger::new();
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(assign_hues(&p3, 2, &mut l), [0, 0, 1]);
        assert_eq!(assign_hues(&p3, 3, &mut l), [0, 0, 0]);
        // C5 visited 0,1,2,3,4.
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(assign_hues(&c5, 2, &mut l), [0, 0, 1, 1, 2]);
    }

    #[test]
    fn long_path_restores_match_mirror() {
        let n = 2000;
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let opts = SparseOptions {
            segment_size: Some(40),
            verify_restores: true,
        };
        let (cut, stats) = cut_vertices_sparse_with(&g, &mut SpaceLedger::new(), opts);
        assert_eq!(cut, (1..n - 1).collect::<Vec<_>>());
        assert!(stats.s_restores > 0);
        assert_eq!(stats.shadow_mismatches, 0);
    }

    #[test]
    fn auto_threshold() {
        // n = 16: ⌈log2 log2 16⌉ = 2.
        assert_eq!(Engine::Auto.resolve(16, 32), Engine::Dense);
        assert_eq!(Engine::Auto.resolve(16, 33), Engine::Sparse);
    }
}
