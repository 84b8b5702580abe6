use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use graphdim::input::load_input;
use graphdim::report::{compute, embed_to_file, Which};
use graphdim::verify::{parse_suites, run_suites, VerifyOptions, MAX_SWEEP_ORDER};
use graphdim::{Error, DEFAULT_CAP};

/// Exact graph dimension solver.
#[derive(Parser)]
#[command(name = "graphdim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants of one graph and print a JSON report.
    Compute {
        /// Family spec (path:7, cycle:6, complete:5, kbip:3,4, cube:3,
        /// cayley:z:2,2,2;gens=1.0.0,0.1.0,0.0.1) or a graph6 / edge-list file.
        input: String,
        /// subdim, dim, chi or all.
        #[arg(long, default_value = "all")]
        which: String,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        /// examples, theorem1, prop1, theorem2, lemma2, corollary1,
        /// identity, oracle or all.
        suite: String,
        /// Largest order for the exhaustive labeled-graph sweeps.
        #[arg(long, default_value_t = MAX_SWEEP_ORDER)]
        cap: usize,
    },
    /// Write a unit-distance embedding built from an optimal coloring.
    Embed {
        input: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Domain(_) => 2,
        Error::Cap { .. } => 3,
        Error::Io(_) => 4,
    }
}

fn solver_cap() -> Result<usize, Error> {
    match std::env::var("GRAPHDIM_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("GRAPHDIM_CAP must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("reports serialize")
    );
}

fn run(cli: Cli) -> Result<u8, Error> {
    let cap = solver_cap()?;
    match cli.command {
        Command::Compute {
            input,
            which,
            timing,
        } => {
            let which: Which = which.parse()?;
            let g = load_input(&input)?;
            let start = Instant::now();
            let mut report = compute(&input, &g, which, cap)?;
            if timing {
                report.elapsed_ms = Some(start.elapsed().as_millis());
            }
            print_json(&report);
            Ok(0)
        }
        Command::Verify { suite, cap: order } => {
            let suites = parse_suites(&suite)?;
            let report = run_suites(
                &suites,
                VerifyOptions {
                    sweep_order: order,
                    cap,
                },
            )?;
            for s in &report.suites {
                eprintln!(
                    "{:<11} {} ({} checked, {} failed)",
                    s.suite.name(),
                    if s.pass { "PASS" } else { "FAIL" },
                    s.checked,
                    s.failed
                );
                for f in s.failures() {
                    eprintln!(
                        "  violation: {}",
                        serde_json::to_string(f).expect("instances serialize")
                    );
                }
            }
            print_json(&report);
            Ok(if report.pass { 0 } else { 1 })
        }
        Command::Embed { input, output } => {
            let g = load_input(&input)?;
            let report = embed_to_file(&input, &g, &output, cap)?;
            eprintln!(
                "embedding: ambient dim {}, max edge error {:.3e}, {}",
                report.ambient_dim,
                report.check.max_edge_error,
                if report.check.passed() {
                    "PASS"
                } else {
                    "FAIL"
                }
            );
            let ok = report.check.passed();
            print_json(&report);
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("graphdim: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
