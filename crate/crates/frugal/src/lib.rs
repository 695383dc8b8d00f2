//! Std companion to `frugal-core`: the edge-list format, run reports with
//! ledger metrics, and the text shapes printed by the `frugal` binary.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use frugal_core::bicc::{bcc_all, BccIndex, Mode};
use frugal_core::cutvertex::{cut_vertices, Engine};
use frugal_core::oracle;
use frugal_core::outerplanar::{recognize, Verdict};
use frugal_core::{Graph, SpaceLedger};

pub mod edgelist;

pub use edgelist::{parse_graph, write_graph, ParseError};

/// One block as 0-based vertices and `(u, v)` edges with `u < v`, both sorted.
pub type Block = (Vec<usize>, Vec<(usize, usize)>);

/// Outcome of one command. `bits_peak` is the ledger peak of the run; the
/// input graph is not counted.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub task: &'static str,
    pub n: usize,
    pub m: usize,
    pub output: String,
    pub bits_peak: u64,
    pub bits_breakdown: Vec<(&'static str, u64)>,
    pub wall_time: Duration,
}

impl RunReport {
    fn finish(task: &'static str, g: &Graph, output: String, ledger: &SpaceLedger, start: Instant) -> Self {
        Self {
            task,
            n: g.n(),
            m: g.m(),
            output,
            bits_peak: ledger.peak(),
            bits_breakdown: ledger.report().into_iter().map(|(t, u)| (t, u.peak)).collect(),
            wall_time: start.elapsed(),
        }
    }

    pub fn meter_line(&self) -> String {
        format!("bits_peak={} n={} m={}", self.bits_peak, self.n, self.m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum QueryError {
    #[error("{{{u}, {v}}} is not an edge")]
    UnknownEdge { u: usize, v: usize },
}

/// Ascending 1-based ids, one per line.
pub fn format_vertices(vs: &[usize]) -> String {
    let mut s = String::new();
    for v in vs {
        let _ = writeln!(s, "{}", v + 1);
    }
    s
}

/// Blocks ordered by their smallest edge, numbered from 1.
pub fn format_blocks(mut blocks: Vec<Block>) -> String {
    blocks.sort_unstable_by(|a, b| a.1.cmp(&b.1));
    let mut s = String::new();
    for (k, (vs, es)) in blocks.iter().enumerate() {
        let _ = writeln!(s, "component {}:", k + 1);
        for v in vs {
            let _ = writeln!(s, "v {}", v + 1);
        }
        for (u, v) in es {
            let _ = writeln!(s, "e {} {}", u + 1, v + 1);
        }
    }
    s
}

fn block_from_edges(mut es: Vec<(usize, usize)>) -> Block {
    es.sort_unstable();
    let mut vs: Vec<usize> = es.iter().flat_map(|&(u, v)| [u, v]).collect();
    vs.sort_unstable();
    vs.dedup();
    (vs, es)
}

pub fn run_cut(g: &Graph, engine: Engine) -> RunReport {
    let start = Instant::now();
    let mut ledger = SpaceLedger::new();
    let cuts = cut_vertices(g, engine, &mut ledger);
    RunReport::finish("cut", g, format_vertices(&cuts), &ledger, start)
}

pub fn run_bcc_all(g: &Graph) -> RunReport {
    let start = Instant::now();
    let mut ledger = SpaceLedger::new();
    let blocks = bcc_all(g, &mut ledger).iter().map(|c| block_from_edges(c.edge_pairs())).collect();
    RunReport::finish("bcc", g, format_blocks(blocks), &ledger, start)
}

/// The block holding edge `{u, v}` (0-based ids).
pub fn run_bcc_edge(g: &Graph, u: usize, v: usize) -> Result<RunReport, QueryError> {
    let start = Instant::now();
    let mut ledger = SpaceLedger::new();
    let idx = BccIndex::build(g, &mut ledger);
    let e = idx.edge(u, v).ok_or(QueryError::UnknownEdge { u: u + 1, v: v + 1 })?;
    let c = idx.collect_component(e, Mode::Edges).expect("slot found by lookup");
    idx.release(&mut ledger);
    Ok(RunReport::finish("bcc", g, format_blocks(vec![block_from_edges(c.edge_pairs())]), &ledger, start))
}

pub fn run_outerplanar(g: &Graph) -> RunReport {
    let start = Instant::now();
    let mut ledger = SpaceLedger::new();
    let verdict = recognize(g, &mut ledger);
    RunReport::finish("outerplanar", g, format!("{verdict}\n"), &ledger, start)
}

pub fn oracle_cut(g: &Graph) -> String {
    format_vertices(&oracle::oracle_cut_vertices(g))
}

pub fn oracle_bcc(g: &Graph) -> String {
    format_blocks(oracle::oracle_bcc(g).into_iter().map(block_from_edges).collect())
}

pub fn oracle_outerplanar(g: &Graph) -> Verdict {
    oracle::oracle_outerplanar(g)
}
