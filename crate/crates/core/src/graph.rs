//! The read-only input graph: adjacency arrays with cross pointers.
//!
//! Vertices are `0..n`. The `i`-th slot of vertex `v` holds a neighbour
//! `u` and the mate index `j` such that slot `(u, j)` holds `v`. Edges
//! appear at both endpoints in input order, which fixes the exploration
//! order of every DFS in this crate.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex id {id} out of range for {n} vertices")]
    IdOutOfRange { id: usize, n: usize },
}

/// One end of an edge: the `slot`-th entry of `vertex`'s adjacency array.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub vertex: usize,
    pub slot: usize,
}

impl EdgeRef {
    pub fn new(vertex: usize, slot: usize) -> Self {
        Self { vertex, slot }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    /// `[neighbour, mate]` per slot, side by side.
    adj: Vec<[u32; 2]>,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    /// Builds the adjacency arrays in O(n + m), rejecting self-loops,
    /// duplicate edges and out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        assert!(n <= u32::MAX as usize, "vertex ids must fit in 32 bits");
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(GraphError::IdOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0;
        offsets.push(0);
        for d in &degree {
            acc += d;
            offsets.push(acc);
        }
        let mut fill = degree;
        fill.iter_mut().for_each(|f| *f = 0);
        let mut adj = vec![[0u32; 2]; acc];
        for &(u, v) in edges {
            let (iu, iv) = (fill[u], fill[v]);
            fill[u] += 1;
            fill[v] += 1;
            adj[offsets[u] + iu] = [v as u32, iv as u32];
            adj[offsets[v] + iv] = [u as u32, iu as u32];
        }
        let graph = Self {
            offsets,
            adj,
            edges: edges.iter().map(|&(u, v)| (u as u32, v as u32)).collect(),
        };
        graph.check_duplicates()?;
        Ok(graph)
    }

    fn check_duplicates(&self) -> Result<(), GraphError> {
        let mut stamp = vec![u32::MAX; self.n()];
        for v in 0..self.n() {
            for i in 0..self.degree(v) {
                let u = self.neighbor(v, i);
                if stamp[u] == v as u32 {
                    return Err(GraphError::DuplicateEdge {
                        u: v.min(u),
                        v: v.max(u),
                    });
                }
                stamp[u] = v as u32;
            }
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// The neighbour in slot `i` of `v`.
    #[inline]
    pub fn neighbor(&self, v: usize, i: usize) -> usize {
        debug_assert!(i < self.degree(v));
        self.adj[self.offsets[v] + i][0] as usize
    }

    /// The slot of `v` in the adjacency array of `neighbor(v, i)`.
    #[inline]
    pub fn mate(&self, v: usize, i: usize) -> usize {
        debug_assert!(i < self.degree(v));
        self.adj[self.offsets[v] + i][1] as usize
    }

    /// The other end of the edge at `e`.
    #[inline]
    pub fn twin(&self, e: EdgeRef) -> EdgeRef {
        EdgeRef::new(self.neighbor(e.vertex, e.slot), self.mate(e.vertex, e.slot))
    }

    /// Position of slot `(v, i)` in the concatenation of all adjacency arrays.
    #[inline]
    pub fn flat(&self, v: usize, i: usize) -> usize {
        self.offsets[v] + i
    }

    /// Total number of slots, `2m`.
    #[inline]
    pub fn slots(&self) -> usize {
        self.adj.len()
    }

    /// The slot at flat position `p`.
    pub fn unflat(&self, p: usize) -> EdgeRef {
        let v = self.offsets.partition_point(|&o| o <= p) - 1;
        EdgeRef::new(v, p - self.offsets[v])
    }

    pub fn try_neighbor(&self, v: usize, i: usize) -> Option<usize> {
        (v < self.n() && i < self.degree(v)).then(|| self.neighbor(v, i))
    }

    pub fn try_mate(&self, v: usize, i: usize) -> Option<usize> {
        (v < self.n() && i < self.degree(v)).then(|| self.mate(v, i))
    }

    /// Slot of `u` in `v`'s adjacency array, by linear scan.
    pub fn find_slot(&self, v: usize, u: usize) -> Option<usize> {
        (0..self.degree(v)).find(|&i| self.neighbor(v, i) == u)
    }

    /// Edges in input order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn neighbors(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.adj[self.offsets[v]..self.offsets[v + 1]]
            .iter()
            .map(|&[u, _]| u as usize)
    }
}
