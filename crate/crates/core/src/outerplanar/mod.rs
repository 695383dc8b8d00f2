//! Outerplanarity recognition by chain reduction.
//!
//! Each biconnected component is shrunk chain by chain. A path counter `P`
//! on every edge records how many internally disjoint paths of two or more
//! edges between its endpoints have been removed; three of them witness a
//! `K2,3` minor. Phase 1 peels closed chains for `⌈log2 log2 n⌉` rounds,
//! which leaves `O(n / log n)` of them. Phase 2 then processes chains from a
//! queue, replacing open chains by artificial edges and bridging chains
//! whose endpoints both have degree at least 5 by shortcuts.

mod verdict;
mod work;

pub use verdict::{check_edge_bound, is_maximal, Verdict};

use crate::bicc::{BccIndex, Item, Mode};
use crate::graph::Graph;
use crate::succinct::{ceil_log2, SpaceLedger};
use work::{chain_budget, Touch, WorkGraph};

const NONE: usize = usize::MAX;

/// Why a graph was found not to be outerplanar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Rejection {
    #[error("more than 2n-3 edges")]
    EdgeBound,
    #[error("loop through vertex {vertex}")]
    LoopDetected { vertex: usize },
    #[error("vertex {vertex} has three neighbours of degree 2")]
    ThreeDegreeTwoNeighbors { vertex: usize },
    #[error("three disjoint paths between {u} and {v}")]
    PathCountExceeded { u: usize, v: usize },
    #[error("more than {limit} artificial edges and shortcuts")]
    AuxCapacityExceeded { limit: usize },
    #[error("third artificial edge at vertex {vertex}")]
    ArtificialOverflow { vertex: usize },
    #[error("{closed} closed chains left after the first phase, budget {limit}")]
    TooManyClosedChains { closed: usize, limit: usize },
    #[error("no chain left to process while {edges} edges remain")]
    DExhausted { edges: usize },
    #[error("vertex {vertex} was cut off from the rest of its component")]
    DegreeCollapse { vertex: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub rejection: Option<Rejection>,
}

/// Hooks into a recognition run. All methods default to doing nothing.
pub trait Observer {
    /// A component with at least one edge starts.
    fn component(&mut self, _n: usize, _m: usize) {}
    /// Whether to count closed chains after every Phase 1 round (costs an
    /// extra scan per round).
    fn wants_round_counts(&self) -> bool {
        false
    }
    fn round_done(&mut self, _round: usize, _closed_chains: usize) {}
    /// Phase 2 starts with `q` good closed chains out of `closed`.
    fn phase2(&mut self, _q: usize, _closed: usize) {}
    /// A shortcut now joins `first` and `last`, the ends of a chain that is
    /// not good.
    fn shortcut(&mut self, _first: usize, _last: usize) {}
    /// Artificial edges plus shortcuts currently stored.
    fn aux_live(&mut self, _live: usize) {}
    /// Edge `u–v` leaves `G'` with final counter `p`.
    fn edge_retired(&mut self, _u: usize, _v: usize, _p: u8, _artificial: bool) {}
}

impl Observer for () {}

/// Phase 1 length. With `Fixed` rounds the closed-chain budget at the start
/// of Phase 2 is not enforced, since it relies on the default count.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Rounds {
    /// `max(1, ⌈log2 log2 n⌉)` for a component on `n` vertices.
    #[default]
    Auto,
    Fixed(usize),
}

/// The verdict for `g`.
pub fn recognize(g: &Graph, ledger: &mut SpaceLedger) -> Verdict {
    recognize_with(g, ledger, &mut ()).verdict
}

pub fn recognize_with(g: &Graph, ledger: &mut SpaceLedger, obs: &mut impl Observer) -> Outcome {
    recognize_rounds(g, Rounds::Auto, ledger, obs)
}

pub fn recognize_rounds(
    g: &Graph,
    rounds: Rounds,
    ledger: &mut SpaceLedger,
    obs: &mut impl Observer,
) -> Outcome {
    let reject = |r| Outcome { verdict: Verdict::NotOuterplanar, rejection: Some(r) };
    if !check_edge_bound(g.n(), g.m()) {
        return reject(Rejection::EdgeBound);
    }
    let idx = BccIndex::build(g, ledger);
    let mut wg = WorkGraph::new(g, rounds == Rounds::Auto, ledger);
    let mut blocks = idx.enumerate(ledger);
    let mut result = Ok(());
    loop {
        let got = blocks.next_component(Mode::Edges, |it| {
            if let Item::Edge(a, b) = it {
                wg.load_edge((a.vertex, a.slot), (b.vertex, b.slot));
            }
        });
        if got.is_none() {
            break;
        }
        obs.component(wg.n_c, wg.m_c);
        result = run_component(&mut wg, rounds, obs);
        if result.is_err() {
            break;
        }
    }
    blocks.release(ledger);
    wg.release(ledger);
    idx.release(ledger);
    match result {
        Err(r) => reject(r),
        Ok(()) => Outcome {
            verdict: if is_maximal(g.n(), g.m()) {
                Verdict::MaximalOuterplanar
            } else {
                Verdict::Outerplanar
            },
            rejection: None,
        },
    }
}

fn run_component(wg: &mut WorkGraph<'_>, rounds: Rounds, obs: &mut impl Observer) -> Result<(), Rejection> {
    let n = wg.n_c;
    if n > 2 {
        if !check_edge_bound(n, wg.m_c) {
            return Err(Rejection::EdgeBound);
        }
        let (t, budget) = match rounds {
            Rounds::Auto => ((ceil_log2(ceil_log2(n as u64) as u64) as usize).max(1), chain_budget(n)),
            Rounds::Fixed(t) => (t, usize::MAX),
        };
        phase1(wg, t, obs)?;
        if wg.edges > 1 {
            phase2(wg, budget, obs)?;
        }
    }
    wg.finish_component(obs);
    Ok(())
}

fn phase1(wg: &mut WorkGraph<'_>, rounds: usize, obs: &mut impl Observer) -> Result<(), Rejection> {
    for round in 1..=rounds {
        let mut x = 0;
        while let Some(v) = wg.next_alive(x) {
            if wg.degree(v) == 2 {
                wg.queue.insert(v);
            }
            x = v + 1;
        }
        while let Some(s) = wg.queue.choice() {
            wg.queue.remove(s);
            if stage(wg, s, obs)? {
                if obs.wants_round_counts() {
                    (round..=rounds).for_each(|r| obs.round_done(r, 0));
                }
                return Ok(());
            }
        }
        clear_tried(wg);
        if obs.wants_round_counts() {
            let (closed, _) = scan(wg, false)?;
            obs.round_done(round, closed);
        }
    }
    Ok(())
}

/// One stage from `s`. Returns true once the component is down to a
/// single edge. When a later chain of the stage cannot be removed, the
/// endpoints that joined it are marked tried, so no other stage of this
/// round removes that face.
fn stage(wg: &mut WorkGraph<'_>, s: usize, obs: &mut impl Observer) -> Result<bool, Rejection> {
    let mut joined = [NONE; 2];
    let mut cur = s;
    loop {
        let c = wg.find_chain(cur, false, Touch::CheckDrain)?;
        let closing = if c.tried { None } else { wg.closing(&c) };
        let Some(closing) = closing else {
            for v in joined.into_iter().filter(|&v| v != NONE) {
                wg.tried.set(v, true);
            }
            return Ok(false);
        };
        wg.remove_closed(&c, closing, obs)?;
        if wg.edges == 1 {
            return Ok(true);
        }
        joined = [c.u, c.w].map(|e| if wg.degree(e) == 2 { e } else { NONE });
        cur = match joined {
            [NONE, NONE] => return Ok(false),
            [NONE, e] | [e, _] => e,
        };
    }
}

/// Counts closed and good closed chains; with `enqueue`, one vertex of
/// every good closed chain goes into `D`. Uses the tried plane as visited
/// marks and leaves it clear.
fn scan(wg: &mut WorkGraph<'_>, enqueue: bool) -> Result<(usize, usize), Rejection> {
    let (mut closed, mut good) = (0, 0);
    let mut x = 0;
    while let Some(v) = wg.next_alive(x) {
        x = v + 1;
        if wg.degree(v) != 2 || wg.tried.get(v) {
            continue;
        }
        let c = wg.find_chain(v, false, Touch::Mark)?;
        if wg.closing(&c).is_some() {
            closed += 1;
            if wg.is_good(&c) {
                good += 1;
                if enqueue {
                    wg.queue.insert(v);
                }
            }
        }
    }
    clear_tried(wg);
    Ok((closed, good))
}

fn clear_tried(wg: &mut WorkGraph<'_>) {
    let mut x = 0;
    while let Some(v) = wg.next_alive(x) {
        wg.tried.set(v, false);
        x = v + 1;
    }
}

fn phase2(wg: &mut WorkGraph<'_>, budget: usize, obs: &mut impl Observer) -> Result<(), Rejection> {
    let (closed, q) = scan(wg, true)?;
    obs.phase2(q, closed);
    if closed > budget {
        return Err(Rejection::TooManyClosedChains { closed, limit: budget });
    }
    wg.aux_cap = 2 * q;
    while wg.edges > 1 {
        let Some(s) = wg.queue.choice() else {
            return Err(Rejection::DExhausted { edges: wg.edges });
        };
        wg.queue.remove(s);
        debug_assert!(wg.is_alive(s) && wg.degree(s) == 2);
        let c = wg.find_chain(s, true, Touch::Nothing)?;
        if !wg.is_good(&c) {
            wg.install_shortcut(&c, obs)?;
            continue;
        }
        let dropped = match wg.closing(&c) {
            Some(closing) => {
                wg.remove_closed(&c, closing, obs)?;
                true
            }
            None => wg.replace_with_artificial(&c, obs)?,
        };
        if dropped && wg.edges > 1 {
            wg.degree_dropped(c.u)?;
            wg.degree_dropped(c.w)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn verdict(n: usize, edges: &[(usize, usize)]) -> Outcome {
        let g = Graph::from_edges(n, edges).unwrap();
        let mut ledger = SpaceLedger::new();
        let out = recognize_with(&g, &mut ledger, &mut ());
        assert_eq!(ledger.live(), 0);
        out
    }

    fn cycle(n: usize) -> Vec<(usize, usize)> {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(verdict(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).rejection, Some(Rejection::EdgeBound));
        // Fan on five vertices: hub 0, path 1-2-3-4.
        let fan = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)];
        assert_eq!(verdict(5, &fan).verdict, Verdict::MaximalOuterplanar);
        assert_eq!(verdict(5, &cycle(5)).verdict, Verdict::Outerplanar);
        let k23 = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)];
        assert_eq!(verdict(5, &k23).verdict, Verdict::NotOuterplanar);
        let bowtie = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)];
        assert_eq!(verdict(5, &bowtie).verdict, Verdict::Outerplanar);
        assert_eq!(verdict(0, &[]).verdict, Verdict::Outerplanar);
        assert_eq!(verdict(2, &[(0, 1)]).verdict, Verdict::MaximalOuterplanar);
    }

    #[derive(Default)]
    struct Retired(Vec<(usize, usize, u8)>);

    impl Observer for Retired {
        fn edge_retired(&mut self, u: usize, v: usize, p: u8, _artificial: bool) {
            self.0.push((u.min(v), u.max(v), p));
        }
    }

    #[test]
    fn triangle_counters() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let mut r = Retired::default();
        recognize_with(&g, &mut SpaceLedger::new(), &mut r);
        r.0.sort_unstable();
        assert_eq!(r.0, [(0, 1, 1), (0, 2, 1), (1, 2, 1)]);
    }
}
