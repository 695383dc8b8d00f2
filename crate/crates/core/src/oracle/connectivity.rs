use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::cutvertex::Mark;
use crate::graph::Graph;

/// Adjacency sets with vertex deletion and edge insertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutableGraph {
    adj: Vec<BTreeSet<usize>>,
    alive: Vec<bool>,
}

impl MutableGraph {
    pub fn from_graph(g: &Graph) -> Self {
        let mut adj = vec![BTreeSet::new(); g.n()];
        for (u, v) in g.edges() {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Self {
            adj,
            alive: vec![true; g.n()],
        }
    }

    /// The subgraph on the listed edges; vertices not touched are dead.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![BTreeSet::new(); n];
        let mut alive = vec![false; n];
        for &(u, v) in edges {
            adj[u].insert(v);
            adj[v].insert(u);
            alive[u] = true;
            alive[v] = true;
        }
        Self { adj, alive }
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive[v]
    }

    pub fn alive(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.adj.len()).filter(|&v| self.alive[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        self.adj[v].insert(u);
        self.adj[u].insert(v)
    }

    pub fn remove_vertex(&mut self, v: usize) {
        for u in core::mem::take(&mut self.adj[v]) {
            self.adj[u].remove(&v);
        }
        self.alive[v] = false;
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Connected components among alive vertices.
    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.adj.len()];
        let mut count = 0;
        for s in self.alive() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        count
    }
}

/// `v` is a cut vertex iff deleting it leaves more components among the
/// remaining vertices than its own component contributed.
pub fn oracle_cut_vertices(g: &Graph) -> Vec<usize> {
    let base = MutableGraph::from_graph(g);
    let before = base.components();
    (0..g.n())
        .filter(|&v| {
            if g.degree(v) == 0 {
                return false;
            }
            let mut h = base.clone();
            h.remove_vertex(v);
            h.components() > before
        })
        .collect()
}

/// Lowpoint DFS in the crate's DFS order, returning cut vertices and the
/// blocks as edge lists.
fn lowpoint(g: &Graph) -> (Vec<usize>, Vec<Vec<(usize, usize)>>) {
    const NONE: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut parent = vec![NONE; n];
    let mut cut = vec![false; n];
    let mut blocks = Vec::new();
    let mut estack: Vec<(usize, usize)> = Vec::new();
    let mut t = 0;
    for r in 0..n {
        if disc[r] != NONE {
            continue;
        }
        disc[r] = t;
        low[r] = t;
        t += 1;
        let mut root_children = 0;
        let mut stack = vec![(r, 0usize)];
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < g.degree(v) {
                let u = g.neighbor(v, *i);
                *i += 1;
                if disc[u] == NONE {
                    parent[u] = v;
                    disc[u] = t;
                    low[u] = t;
                    t += 1;
                    estack.push((v, u));
                    stack.push((u, 0));
                } else if u != parent[v] && disc[u] < disc[v] {
                    low[v] = low[v].min(disc[u]);
                    estack.push((v, u));
                }
                continue;
            }
            stack.pop();
            let Some(&(p, _)) = stack.last() else { break };
            low[p] = low[p].min(low[v]);
            if low[v] >= disc[p] {
                if p == r {
                    root_children += 1;
                } else {
                    cut[p] = true;
                }
                let mut block = Vec::new();
                while let Some(e) = estack.pop() {
                    block.push(e);
                    if e == (p, v) {
                        break;
                    }
                }
                blocks.push(block);
            } else if p == r {
                root_children += 1;
            }
        }
        if root_children >= 2 {
            cut[r] = true;
        }
    }
    let cuts = (0..n).filter(|&v| cut[v]).collect();
    (cuts, blocks)
}

pub fn lowpoint_cut_vertices(g: &Graph) -> Vec<usize> {
    lowpoint(g).0
}

/// Blocks as edge lists with `u < v`, each sorted, ordered by first edge.
pub fn oracle_bcc(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let mut blocks: Vec<Vec<(usize, usize)>> = lowpoint(g)
        .1
        .into_iter()
        .map(|b| {
            let mut b: Vec<_> = b.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
            b.sort_unstable();
            b
        })
        .collect();
    blocks.sort_unstable();
    blocks
}

/// `(parent, child, mark)` for every tree edge of the crate's DFS order,
/// from the definition: full iff some edge leaves the child's subtree for
/// a strict ancestor of the parent, half iff otherwise one reaches the
/// parent itself.
pub fn oracle_marks(g: &Graph) -> Vec<(usize, usize, Mark)> {
    const NONE: usize = usize::MAX;
    let n = g.n();
    let mut parent = vec![NONE; n];
    let mut seen = vec![false; n];
    for r in 0..n {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let mut stack = vec![(r, 0usize)];
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i == g.degree(v) {
                stack.pop();
                continue;
            }
            let u = g.neighbor(v, *i);
            *i += 1;
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                stack.push((u, 0));
            }
        }
    }
    let in_subtree = |x: usize, v: usize| {
        let mut y = x;
        loop {
            if y == v {
                return true;
            }
            if parent[y] == NONE {
                return false;
            }
            y = parent[y];
        }
    };
    let mut out = Vec::new();
    for v in 0..n {
        let u = parent[v];
        if u == NONE {
            continue;
        }
        let mut mark = Mark::Unmarked;
        for x in (0..n).filter(|&x| in_subtree(x, v)) {
            for y in g.neighbors(x) {
                if in_subtree(y, v) || (x == v && y == u) {
                    continue;
                }
                if y == u {
                    mark = mark.max(Mark::Half);
                } else {
                    mark = Mark::Full;
                }
            }
        }
        out.push((u, v, mark));
    }
    out
}
