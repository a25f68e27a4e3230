use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tsa_bench::compare::{compare, load_all};
use tsa_bench::listing;
use tsa_bench::runner::run_experiment;
use tsa_bench::scatter::{scatter, write_scatter, ScatterMode, ScatterParams};
use tsa_bench::{BenchError, ExperimentConfig, SuiteKind};

#[derive(Parser)]
#[command(name = "tsa-bench", version, about = "Benchmark harness for the tangent search optimizer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run seeded batches over a suite and write traces and summaries.
    Run {
        /// JSON experiment file; flags override its values.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        suite: Option<String>,
        #[arg(long)]
        runs: Option<u32>,
        #[arg(long)]
        max_fe: Option<u64>,
        /// Base seed; run i uses seed + i.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Compare result files; the first is the reference.
    Compare {
        #[arg(required = true, num_args = 2..)]
        results: Vec<PathBuf>,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
        /// Write the comparison as JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit tangent-flight samples as `index,value` CSV.
    Scatter {
        #[arg(long, default_value = "raw_tangent")]
        mode: String,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Upper end of the angle range, radians.
        #[arg(long, default_value_t = std::f64::consts::PI / 2.1)]
        theta_max: f64,
        #[arg(long, default_value_t = 30)]
        dim: usize,
    },
    /// List the registered test functions.
    List {
        #[arg(long)]
        suite: Option<String>,
        /// JSON instead of a table.
        #[arg(long)]
        machine: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("tsa-bench: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn dispatch(command: Command) -> Result<(), BenchError> {
    match command {
        Command::Run { config, suite, runs, max_fe, seed, out, jobs } => {
            let mut cfg = match config {
                Some(path) => ExperimentConfig::from_file(&path)?,
                None => ExperimentConfig::default(),
            };
            if let Some(s) = suite {
                cfg.suite = s.parse()?;
            }
            if let Some(r) = runs {
                cfg.runs = r;
            }
            if max_fe.is_some() {
                cfg.max_fe = max_fe;
            }
            if let Some(s) = seed {
                cfg.base_seed = s;
            }
            if let Some(o) = out {
                cfg.output_dir = o;
            }
            if jobs.is_some() {
                cfg.jobs = jobs;
            }
            let (results, written) = run_experiment(&cfg)?;
            for f in &results.functions {
                println!(
                    "{:<5} mean {:>12.4e}  std {:>12.4e}  best {:>12.4e}",
                    f.function_id, f.summary.mean, f.summary.std, f.summary.best
                );
            }
            eprintln!(
                "wrote {} traces, {} and {}",
                written.traces.len(),
                written.summary.display(),
                written.results.display()
            );
        }
        Command::Compare { results, alpha, out } => {
            let sets = load_all(&results)?;
            let cmp = compare(&sets, alpha)?;
            match out {
                Some(path) => {
                    cmp.save(&path)?;
                    print!("{}", cmp.table());
                }
                None => println!("{}", serde_json::to_string_pretty(&cmp).expect("serializes")),
            }
        }
        Command::Scatter { mode, samples, seed, out, theta_max, dim } => {
            let mode: ScatterMode = mode.parse()?;
            let points = scatter(&ScatterParams { mode, samples, seed, theta_max, dim })?;
            write_scatter(&out, &points)?;
        }
        Command::List { suite, machine } => {
            let suite = suite.map(|s| s.parse::<SuiteKind>()).transpose()?;
            let rows = listing::rows(suite)?;
            if machine {
                println!("{}", serde_json::to_string_pretty(&rows).expect("serializes"));
            } else {
                print!("{}", listing::table(&rows));
            }
        }
    }
    Ok(())
}
