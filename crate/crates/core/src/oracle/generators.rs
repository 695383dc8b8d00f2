//! Seeded generators. All randomness is ChaCha8 seeded from a `u64`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("{m} edges do not fit a simple graph on {n} vertices")]
    TooManyEdges { n: usize, m: usize },
    #[error("a connected graph on {n} vertices needs at least {min} edges, got {m}")]
    TooFewEdges { n: usize, m: usize, min: usize },
    #[error("a maximal outerplanar polygon needs at least 3 vertices, got {n}")]
    TooFewVertices { n: usize },
}

fn max_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn key(n: usize, u: usize, v: usize) -> u64 {
    let (a, b) = (u.min(v), u.max(v));
    (a * n + b) as u64
}

/// `count` distinct pairs avoiding `taken`, uniformly at random.
fn sample_pairs(
    n: usize,
    count: usize,
    taken: &BTreeSet<u64>,
    rng: &mut ChaCha8Rng,
) -> Vec<(usize, usize)> {
    let free = max_edges(n) - taken.len();
    if count == 0 {
        return Vec::new();
    }
    if 2 * count <= free {
        let mut chosen = BTreeSet::new();
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v {
                continue;
            }
            let k = key(n, u, v);
            if !taken.contains(&k) && chosen.insert(k) {
                out.push((u, v));
            }
        }
        out
    } else {
        let mut all: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !taken.contains(&key(n, u, v)))
            .collect();
        let (picked, _) = all.partial_shuffle(rng, count);
        picked.to_vec()
    }
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("generator emits simple graphs")
}

/// Uniform random graph with exactly `m` edges, in random order.
pub fn gen_gnm(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    if m > max_edges(n) {
        return Err(GenError::TooManyEdges { n, m });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = sample_pairs(n, m, &BTreeSet::new(), &mut rng);
    edges.shuffle(&mut rng);
    Ok(build(n, &edges))
}

/// Random spanning tree (random recursive tree over a random vertex order)
/// plus `m − (n − 1)` further uniform edges, all in random order.
pub fn gen_connected(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    let min = n.saturating_sub(1);
    if m < min {
        return Err(GenError::TooFewEdges { n, m, min });
    }
    if m > max_edges(n) {
        return Err(GenError::TooManyEdges { n, m });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::with_capacity(m);
    let mut taken = BTreeSet::new();
    for i in 1..n {
        let p = order[rng.gen_range(0..i)];
        edges.push((order[i], p));
        taken.insert(key(n, order[i], p));
    }
    edges.extend(sample_pairs(n, m - min, &taken, &mut rng));
    edges.shuffle(&mut rng);
    Ok(build(n, &edges))
}

/// Random maximal outerplanar graph: the cycle `0, 1, …, n−1` followed by
/// `n − 3` chords. Each polygon `i..=j` (side `{i, j}` present) is split at
/// a uniformly random apex `k` strictly between `i` and `j`.
pub fn gen_mop(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::TooFewVertices { n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut stack = alloc::vec![(0, n - 1)];
    while let Some((i, j)) = stack.pop() {
        if j - i < 2 {
            continue;
        }
        let k = rng.gen_range(i + 1..j);
        if k - i >= 2 {
            edges.push((i, k));
        }
        if j - k >= 2 {
            edges.push((k, j));
        }
        stack.push((i, k));
        stack.push((k, j));
    }
    Ok(build(n, &edges))
}

/// Random relabelling and random edge order of `g`.
pub fn permute(g: &Graph, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut label: Vec<usize> = (0..g.n()).collect();
    label.shuffle(&mut rng);
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| {
            if rng.gen::<bool>() {
                (label[u], label[v])
            } else {
                (label[v], label[u])
            }
        })
        .collect();
    edges.shuffle(&mut rng);
    build(g.n(), &edges)
}

/// Every labelled simple graph on `n` vertices (`2^(n(n−1)/2)` of them),
/// edges listed in lexicographic order.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 64);
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        build(n, &edges)
    })
}
