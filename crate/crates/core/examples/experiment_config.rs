//! Run a small plan experiment from a JSON config, the same way the
//! `windplan` binary does, and list the files it writes.

use windplan::experiment::{execute, Command, ExperimentConfig, Overrides};

const CONFIG: &str = r#"{
    "command": "plan",
    "algorithms": ["mawdo", "gwo"],
    "runs": 2,
    "seed": 21,
    "planner": {"population": 320, "iterations": 40}
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = ExperimentConfig::from_json(CONFIG)?;
    let out = std::env::temp_dir().join("windplan_experiment_config");
    let overrides = Overrides {
        out: Some(out.clone()),
        ..Default::default()
    };
    let exp = cfg.resolve(Command::Plan, &overrides, None)?;
    println!(
        "{} runs of {:?}, {} particles x {} iterations per replan",
        exp.runs, exp.algorithms, exp.population, exp.iterations
    );
    execute(&exp)?;
    let mut files: Vec<_> = std::fs::read_dir(&out)?
        .filter_map(|e| e.ok().map(|e| e.file_name().to_string_lossy().into_owned()))
        .collect();
    files.sort();
    println!("{}:", out.display());
    for f in files {
        println!("  {f}");
    }
    println!(
        "{}",
        std::fs::read_to_string(out.join("metrics.csv")).unwrap_or_default()
    );
    Ok(())
}
