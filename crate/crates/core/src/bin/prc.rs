use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use perfect_coalition::harness::{
    cmd_compute, cmd_enumerate, cmd_family, cmd_sweep, cmd_verify, Emit, GraphInput, HarnessError, SweepOptions,
    TheoremReport, SUITES,
};
use perfect_coalition::solver::SolveOptions;

#[derive(Parser)]
#[command(name = "prc", version, about = "Perfect coalition partitions of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute PRC(G) and a certificate for one graph.
    #[command(group(ArgGroup::new("input").required(true).args(["edge_list", "graph6"])))]
    Compute {
        #[arg(long, value_name = "PATH")]
        edge_list: Option<PathBuf>,
        #[arg(long, value_name = "STR")]
        graph6: Option<String>,
        /// Print the JSON document instead of text.
        #[arg(long)]
        json: bool,
        /// Worker threads for the search; the result does not depend on it.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Solve every graph6 line of a file into JSONL.
    Sweep {
        /// One graph6 record per line.
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        /// JSONL output, one line per input line.
        #[arg(long = "out", value_name = "PATH")]
        output: PathBuf,
        /// Keep existing output records and continue after them.
        #[arg(long)]
        resume: bool,
        /// Also compute the coalition number (n <= 10).
        #[arg(long)]
        with_c: bool,
        /// Record graphs with more than K vertices as errors.
        #[arg(long, value_name = "K")]
        max_n: Option<usize>,
        /// Add per-graph wall time (output is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// List vertex sets of a given size.
    Enumerate {
        #[arg(long, value_name = "STR")]
        graph6: String,
        #[arg(long, value_name = "K")]
        k: usize,
        #[arg(long, value_enum, default_value_t = Kind::Pds)]
        kind: Kind,
    },
    /// Run a theorem suite, or `all` of them.
    Verify {
        #[arg(long, value_name = "NAME")]
        suite: String,
        #[arg(long)]
        json: bool,
    },
    /// Print a named graph construction.
    Family {
        /// e.g. path:9, cycle:12, gdelta:4, t2:3,4,1, tree-r
        #[arg(long, value_name = "STR")]
        spec: String,
        #[arg(long, value_enum, default_value_t = EmitArg::Graph6)]
        emit: EmitArg,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Kind {
    /// perfect dominating sets
    Pds,
}

#[derive(Copy, Clone, ValueEnum)]
enum EmitArg {
    Graph6,
    Edges,
}

fn print_report(report: &TheoremReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string(report).expect("reports serialize"));
        return;
    }
    println!("{}", report.summary());
    for f in &report.failures {
        println!("  {}: expected {}, got {}", f.graph6, f.expected, f.got);
    }
    for note in &report.notes {
        println!("  note: {note}");
    }
}

fn run(cli: Cli) -> Result<bool, HarnessError> {
    match cli.command {
        Command::Compute { edge_list, graph6, json, threads } => {
            let input = match (edge_list, graph6) {
                (Some(path), _) => GraphInput::EdgeListFile(path),
                (None, Some(s)) => GraphInput::Graph6(s),
                (None, None) => unreachable!("clap requires one input"),
            };
            let g = input.load()?;
            let report = cmd_compute(&g, &SolveOptions { threads, ..Default::default() })?;
            if json {
                println!("{}", serde_json::to_string(&report).expect("reports serialize"));
            } else {
                print!("{}", report.to_text());
            }
        }
        Command::Sweep { input, output, resume, with_c, max_n, timings } => {
            let opts = SweepOptions { with_c, max_n, timings, ..Default::default() };
            let s = cmd_sweep(&input, &output, resume, &opts)?;
            eprintln!("{} written ({} errors), {} kept from earlier run", s.written, s.errors, s.resumed);
        }
        Command::Enumerate { graph6, k, kind: Kind::Pds } => {
            let g = GraphInput::Graph6(graph6).load()?;
            for line in cmd_enumerate(&g, k)? {
                println!("{line}");
            }
        }
        Command::Verify { suite, json } => {
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut passed = true;
            for name in names {
                let report = cmd_verify(name)?;
                print_report(&report, json);
                passed &= report.passed();
            }
            return Ok(passed);
        }
        Command::Family { spec, emit } => {
            let emit = match emit {
                EmitArg::Graph6 => Emit::Graph6,
                EmitArg::Edges => Emit::Edges,
            };
            print!("{}", cmd_family(&spec, emit)?);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("prc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
