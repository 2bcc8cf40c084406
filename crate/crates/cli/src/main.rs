mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sdgraph::enumerate::connected_graphs_up_to;
use sdgraph::verify::{
    conjecture_scan, conjecture_scan_graphs, ear_tposy_suite, tposy_base_graphs, verify_graphs,
    Check,
};
use sdgraph::{Error, Limits};

use input::{graph6_stream, load, read_text, Source};
use report::Report;

/// Largest order for the built-in connected-graph sweeps.
const SWEEP_MAX_ORDER: usize = 10;
/// Largest base-graph order for the ear suite (bounded by canonical labelling).
const EAR_MAX_ORDER: usize = 16;

#[derive(Parser, Debug)]
#[command(
    name = "sdgraph",
    version,
    about = "Blossom configurations, vertex marking and König–Egerváry tests on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, env = "SDGRAPH_THREADS")]
    threads: Option<usize>,

    /// Largest order for which maximum matchings are enumerated.
    #[arg(long, global = true, env = "SDGRAPH_ENUMERATION_ORDER", default_value_t = Limits::default().enumeration_order,
          value_parser = parse_order)]
    enumeration_order: usize,

    /// Largest number of maximum matchings enumerated for one graph.
    #[arg(long, global = true, env = "SDGRAPH_MAX_MATCHINGS", default_value_t = Limits::default().matching_count)]
    max_matchings: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Marking sets, KE verdicts, configurations and witnesses for one graph.
    Analyze {
        #[command(flatten)]
        source: Source,
        /// Configurations of each kind listed in full.
        #[arg(long, default_value_t = 16)]
        max_listed: usize,
    },
    /// Exhaustive verification sweep; exits 1 on any counterexample.
    Verify {
        #[arg(value_enum)]
        check: CheckArg,
        /// Largest order swept (for eartposy: largest base-graph order).
        #[arg(short = 'n', long)]
        max_order: Option<usize>,
        /// Check the graphs of a graph6 stream instead (`-` for standard input).
        #[arg(long, value_name = "PATH", conflicts_with = "max_order")]
        file: Option<PathBuf>,
    },
    /// A maximum matching and a flower or Tposy through VERTEX.
    Witness {
        #[command(flatten)]
        source: Source,
        vertex: u64,
    },
    /// Classifies Hamiltonian graphs: even orders as KE, SD or neither; odd
    /// orders checked to be SD.
    Conjecture {
        #[arg(short = 'n', long, default_value_t = 8)]
        max_order: usize,
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    /// V_T = V_ESG = V_J, with every witness valid.
    Main,
    /// Direct KE test agrees with the flower-or-posy test.
    Sterboul,
    /// Direct KE test agrees with the flower-or-Tposy test.
    Tposy,
    /// A Jposy under some maximum matching rules out KE.
    Jposy,
    /// With a perfect matching: KE iff no perfect matching has a Jposy.
    Corollary,
    /// Every vertex of a subdivided barbell or K4 plus an odd ear is on a Tposy.
    Eartposy,
    /// All of main, sterboul, tposy, jposy and corollary.
    All,
}

fn parse_order(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n > sdgraph::graph::MAX_ORDER {
        return Err(format!("at most {}", sdgraph::graph::MAX_ORDER));
    }
    Ok(n)
}

fn check_order(what: &'static str, got: usize, limit: usize) -> sdgraph::Result<()> {
    if got > limit {
        return Err(Error::Capacity { what, got, limit });
    }
    Ok(())
}

/// Output plus whether a counterexample was found.
fn run(cli: &Cli, limits: &Limits) -> sdgraph::Result<(Report, bool)> {
    match &cli.command {
        Command::Analyze { source, max_listed } => {
            let g = load(source)?;
            Ok((report::analyze(&g, limits, *max_listed)?, false))
        }
        Command::Witness { source, vertex } => {
            let g = load(source)?;
            let v = g.vertex(*vertex)?;
            Ok((report::witness(&g, v, *vertex, limits)?, false))
        }
        Command::Verify {
            check: CheckArg::Eartposy,
            max_order,
            file,
        } => {
            let n = max_order.unwrap_or(12);
            let bases = match file {
                Some(p) => graph6_stream(&read_text(p)?)?,
                None => {
                    check_order("ear suite base order", n, EAR_MAX_ORDER)?;
                    tposy_base_graphs(n)?
                }
            };
            let r = ear_tposy_suite(&bases, limits)?;
            let failed = !r.passed();
            Ok((report::ears(n, &r), failed))
        }
        Command::Verify {
            check,
            max_order,
            file,
        } => {
            let checks: Vec<Check> = match check {
                CheckArg::Main => vec![Check::Main],
                CheckArg::Sterboul => vec![Check::Sterboul],
                CheckArg::Tposy => vec![Check::Tposy],
                CheckArg::Jposy => vec![Check::Jposy],
                CheckArg::Corollary => vec![Check::Corollary],
                CheckArg::All | CheckArg::Eartposy => Check::ALL.to_vec(),
            };
            let (graphs, n) = match file {
                Some(p) => (graph6_stream(&read_text(p)?)?, None),
                None => {
                    let n = max_order.unwrap_or(7);
                    check_order("sweep order", n, SWEEP_MAX_ORDER)?;
                    (connected_graphs_up_to(n)?, Some(n))
                }
            };
            let r = verify_graphs(&graphs, &checks, limits)?;
            let name = check
                .to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default();
            Ok((report::verification(&name, n, &r), !r.passed()))
        }
        Command::Conjecture { max_order, file } => {
            let r = match file {
                Some(p) => {
                    conjecture_scan_graphs(&graph6_stream(&read_text(p)?)?, *max_order, limits)?
                }
                None => {
                    check_order("sweep order", *max_order, SWEEP_MAX_ORDER)?;
                    conjecture_scan(*max_order, limits)?
                }
            };
            Ok((report::conjecture(&r), false))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: cannot start {t} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    let limits = Limits {
        enumeration_order: cli.enumeration_order,
        matching_count: cli.max_matchings,
        ..Limits::default()
    };
    match run(&cli, &limits) {
        Ok((r, failed)) => {
            let out = match cli.format {
                Format::Json => {
                    serde_json::to_string_pretty(&r.json).expect("JSON values print") + "\n"
                }
                Format::Text => r.text,
            };
            // A closed pipe (`| head`) is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::from(u8::from(failed))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Capacity { .. } => 3,
                Error::Invariant(_) => 1,
                _ => 2,
            })
        }
    }
}
