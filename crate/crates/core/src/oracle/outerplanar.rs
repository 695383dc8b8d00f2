use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::connectivity::{oracle_bcc, MutableGraph};
use crate::graph::Graph;
use crate::outerplanar::{check_edge_bound, is_maximal, Verdict};

/// Degree-2 reduction per block, backed by a checked witness.
///
/// Each block with at least three vertices is reduced by deleting a
/// degree-2 vertex and adding the edge between its neighbours when absent.
/// If that reaches a triangle, the deletions are replayed backwards to
/// grow a Hamiltonian cycle (every deleted vertex must go between two
/// consecutive cycle vertices). The block is accepted only if every cycle
/// edge is an edge of the block and no two remaining edges cross as chords.
pub fn oracle_outerplanar(g: &Graph) -> Verdict {
    if !check_edge_bound(g.n(), g.m()) {
        return Verdict::NotOuterplanar;
    }
    for block in oracle_bcc(g) {
        if hamiltonian_witness(g.n(), &block).is_none() {
            return Verdict::NotOuterplanar;
        }
    }
    if is_maximal(g.n(), g.m()) {
        Verdict::MaximalOuterplanar
    } else {
        Verdict::Outerplanar
    }
}

/// Outer cycle of a biconnected outerplanar block given by its edges, or
/// `None` if the block is not outerplanar. Blocks with one edge yield its
/// two endpoints.
pub fn hamiltonian_witness(n: usize, block: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut h = MutableGraph::from_edges(n, block);
    let verts: Vec<usize> = h.alive().collect();
    if verts.len() <= 2 {
        return Some(verts);
    }
    if block.len() > 2 * verts.len() - 3 {
        return None;
    }
    let mut removed = Vec::new();
    let mut left = verts.len();
    let mut deg2: Vec<usize> = verts.iter().copied().filter(|&v| h.degree(v) == 2).collect();
    while left > 3 {
        let x = loop {
            let x = deg2.pop()?;
            if h.is_alive(x) && h.degree(x) == 2 {
                break x;
            }
        };
        let mut nb = h.neighbors(x);
        let (a, b) = (nb.next()?, nb.next()?);
        drop(nb);
        h.remove_vertex(x);
        h.add_edge(a, b);
        left -= 1;
        removed.push((x, a, b));
        for y in [a, b] {
            if h.degree(y) == 2 {
                deg2.push(y);
            }
        }
    }
    // Rebuild the cycle as a doubly linked list.
    let rest: Vec<usize> = h.alive().collect();
    if h.edge_count() != 3 {
        return None;
    }
    let mut next = vec![usize::MAX; n];
    let mut prev = vec![usize::MAX; n];
    for i in 0..3 {
        next[rest[i]] = rest[(i + 1) % 3];
        prev[rest[(i + 1) % 3]] = rest[i];
    }
    for &(x, a, b) in removed.iter().rev() {
        let (a, b) = if next[a] == b {
            (a, b)
        } else if next[b] == a {
            (b, a)
        } else {
            return None;
        };
        next[a] = x;
        prev[x] = a;
        next[x] = b;
        prev[b] = x;
    }
    let mut cycle = Vec::with_capacity(verts.len());
    let mut v = rest[0];
    loop {
        cycle.push(v);
        v = next[v];
        if v == rest[0] {
            break;
        }
    }
    if cycle.len() != verts.len() {
        return None;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let edges: BTreeSet<(usize, usize)> = block.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let k = cycle.len();
    let mut on_cycle = BTreeSet::new();
    for i in 0..k {
        let (u, v) = (cycle[i], cycle[(i + 1) % k]);
        let e = (u.min(v), u.max(v));
        if !edges.contains(&e) {
            return None;
        }
        on_cycle.insert(e);
    }
    let mut chords: Vec<(usize, usize)> = edges
        .iter()
        .filter(|e| !on_cycle.contains(e))
        .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
        .collect();
    chords.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut open: Vec<(usize, usize)> = Vec::new();
    for (l, r) in chords {
        while open.last().is_some_and(|&(_, r2)| r2 <= l) {
            open.pop();
        }
        if open.last().is_some_and(|&(_, r2)| r2 < r) {
            return None;
        }
        open.push((l, r));
    }
    Some(cycle)
}
