use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Maximum number of internally vertex-disjoint `s`–`t` paths with at least
/// two edges (the direct edge, if any, is ignored). Unit-capacity max flow
/// with every inner vertex split into an in and an out node.
pub fn disjoint_paths(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.n();
    // Node 2v is v_in, 2v+1 is v_out.
    let mut head: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    let mut to = Vec::new();
    let mut cap = Vec::new();
    let mut add = |a: usize, b: usize, c: u32, head: &mut Vec<Vec<usize>>| {
        head[a].push(to.len());
        to.push(b);
        cap.push(c);
        head[b].push(to.len());
        to.push(a);
        cap.push(0);
    };
    for v in 0..n {
        if v != s && v != t {
            add(2 * v, 2 * v + 1, 1, &mut head);
        }
    }
    for (u, v) in g.edges() {
        if (u == s && v == t) || (u == t && v == s) {
            continue;
        }
        add(2 * u + 1, 2 * v, 1, &mut head);
        add(2 * v + 1, 2 * u, 1, &mut head);
    }
    let (src, dst) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; 2 * n];
        let mut q = VecDeque::from([src]);
        prev[src] = usize::MAX - 1;
        while let Some(a) = q.pop_front() {
            for &e in &head[a] {
                let b = to[e];
                if cap[e] > 0 && prev[b] == usize::MAX {
                    prev[b] = e;
                    q.push_back(b);
                }
            }
        }
        if prev[dst] == usize::MAX {
            return flow;
        }
        let mut b = dst;
        while b != src {
            let e = prev[b];
            cap[e] -= 1;
            cap[e ^ 1] += 1;
            b = to[e ^ 1];
        }
        flow += 1;
    }
}

/// Same count by brute force: enumerate all simple `s`–`t` paths with at
/// least one inner vertex, then search for the largest pairwise
/// inner-disjoint family. Exponential; for graphs with a handful of
/// vertices only.
pub fn enumerate_disjoint_paths(g: &Graph, s: usize, t: usize) -> usize {
    let mut paths: Vec<u64> = Vec::new();
    let mut on = vec![false; g.n()];
    fn dfs(g: &Graph, v: usize, t: usize, s: usize, inner: u64, on: &mut [bool], out: &mut Vec<u64>) {
        for u in g.neighbors(v) {
            if u == t {
                if v != s {
                    out.push(inner);
                }
                continue;
            }
            if on[u] || u == s {
                continue;
            }
            on[u] = true;
            dfs(g, u, t, s, inner | 1 << u, on, out);
            on[u] = false;
        }
    }
    dfs(g, s, t, s, 0, &mut on, &mut paths);
    paths.sort_unstable();
    paths.dedup();
    fn best(paths: &[u64], used: u64) -> usize {
        match paths.split_first() {
            None => 0,
            Some((&p, rest)) => {
                let skip = best(rest, used);
                if p & used == 0 {
                    skip.max(1 + best(rest, used | p))
                } else {
                    skip
                }
            }
        }
    }
    best(&paths, 0)
}
