use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use frugal::{parse_graph, write_graph, RunReport};
use frugal_core::cutvertex::Engine;
use frugal_core::oracle::{gen_connected, gen_gnm, gen_mop};
use frugal_core::Graph;

/// Space-frugal cut vertices, biconnected components and outerplanarity.
///
/// Graph files hold a header `n m` and `m` lines `u v` with ids in 1..=n.
/// Pass `-` to read standard input. Results go to stdout, metrics to stderr.
#[derive(Parser)]
#[command(name = "frugal", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the cut vertices in ascending order.
    Cut {
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        #[command(flatten)]
        common: Common,
    },
    /// Print biconnected components as `component k:`, `v` and `e` lines.
    Bcc {
        /// Only the component holding edge {U, V}.
        #[arg(long, num_args = 2, value_names = ["U", "V"], conflicts_with = "all", required_unless_present = "all")]
        edge: Option<Vec<usize>>,
        /// Every component.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Print NOT_OUTERPLANAR, OUTERPLANAR or MAXIMAL_OUTERPLANAR.
    Outerplanar {
        #[command(flatten)]
        common: Common,
    },
    /// Emit a seeded random graph in edge-list format.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        /// Edge count; ignored by `mop`.
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the unrestricted reference implementation of a command.
    Oracle {
        #[arg(value_enum)]
        task: OracleTask,
        file: PathBuf,
    },
}

#[derive(Args)]
struct Common {
    /// Append `bits_peak=<int> n=<int> m=<int>` to stderr.
    #[arg(long)]
    meter: bool,
    file: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Dense,
    Sparse,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Gnm,
    Connected,
    Mop,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleTask {
    Cut,
    Bcc,
    Outerplanar,
}

fn load(path: &PathBuf) -> Result<Graph, String> {
    let mut text = String::new();
    let read = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)
    } else {
        std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut text))
    };
    read.map_err(|e| format!("{}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(report: RunReport, meter: bool) -> String {
    if meter {
        eprintln!("{}", report.meter_line());
    }
    report.output
}

fn run(cmd: Cmd) -> Result<String, String> {
    Ok(match cmd {
        Cmd::Cut { engine, common } => {
            let engine = match engine {
                EngineArg::Dense => Engine::Dense,
                EngineArg::Sparse => Engine::Sparse,
                EngineArg::Auto => Engine::Auto,
            };
            emit(frugal::run_cut(&load(&common.file)?, engine), common.meter)
        }
        Cmd::Bcc { edge, common, .. } => {
            let g = load(&common.file)?;
            let report = match edge.as_deref() {
                Some(&[u, v]) if (1..=g.n()).contains(&u) && (1..=g.n()).contains(&v) => {
                    frugal::run_bcc_edge(&g, u - 1, v - 1).map_err(|e| e.to_string())?
                }
                Some(&[u, v]) => return Err(format!("{{{u}, {v}}} is not an edge")),
                _ => frugal::run_bcc_all(&g),
            };
            emit(report, common.meter)
        }
        Cmd::Outerplanar { common } => emit(frugal::run_outerplanar(&load(&common.file)?), common.meter),
        Cmd::Gen { kind, n, m, seed } => {
            let g = match kind {
                GenKind::Gnm => gen_gnm(n, m, seed),
                GenKind::Connected => gen_connected(n, m, seed),
                GenKind::Mop => gen_mop(n, seed),
            };
            write_graph(&g.map_err(|e| e.to_string())?)
        }
        Cmd::Oracle { task, file } => {
            let g = load(&file)?;
            match task {
                OracleTask::Cut => frugal::oracle_cut(&g),
                OracleTask::Bcc => frugal::oracle_bcc(&g),
                OracleTask::Outerplanar => format!("{}\n", frugal::oracle_outerplanar(&g)),
            }
        }
    })
}

fn main() -> ExitCode {
    match run(Cli::parse().cmd) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
