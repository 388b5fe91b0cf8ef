use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use windplan::experiment::{self, Command, ExperimentConfig, Overrides, OUT_ENV};

/// Wind driven optimization experiments.
#[derive(Parser)]
#[command(name = "windplan", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compare optimizers on the benchmark functions.
    Bench(Flags),
    /// Run the single-enhancement presets against full MAWDO.
    Ablation(Flags),
    /// Receding-horizon path planning among moving obstacles.
    Plan(Flags),
}

#[derive(Args)]
struct Flags {
    /// JSON experiment config.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Master seed; required here or in the config.
    #[arg(long, value_name = "N")]
    seed: Option<u64>,
    /// Independent runs per algorithm and function.
    #[arg(long, value_name = "N")]
    runs: Option<usize>,
    /// Worker threads.
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
    /// Output directory [fallbacks: config, $WINDPLAN_OUT, ./out].
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, flags) = match cli.command {
        Cmd::Bench(f) => (Command::Bench, f),
        Cmd::Ablation(f) => (Command::Ablation, f),
        Cmd::Plan(f) => (Command::Plan, f),
    };
    match run(command, flags) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("windplan: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command, flags: Flags) -> windplan::Result<()> {
    let config = match &flags.config {
        Some(path) => ExperimentConfig::load(path)?,
        None => ExperimentConfig::default(),
    };
    let overrides = Overrides {
        seed: flags.seed,
        runs: flags.runs,
        jobs: flags.jobs,
        out: flags.out,
    };
    let env_out = std::env::var_os(OUT_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from);
    let exp = config.resolve(command, &overrides, env_out)?;
    eprintln!(
        "{command}: {} algorithm(s), {} run(s) each, seed {}, writing to {}",
        exp.algorithms.len(),
        exp.runs,
        exp.seed,
        exp.output_dir.display()
    );
    experiment::execute(&exp)?;
    eprintln!("done");
    Ok(())
}
