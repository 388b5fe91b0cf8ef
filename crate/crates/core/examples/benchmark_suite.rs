//! Compare all five optimizers on a handful of functions in memory and
//! print Best/Ave/Std with rank-sum marks against MAWDO.
//!
//! `windplan bench` runs the same thing over all sixteen functions and
//! writes it to CSV and SVG.

use windplan::experiment::{suite_report, Command, ExperimentConfig, Overrides};

fn main() -> windplan::Result<()> {
    let cfg = ExperimentConfig {
        functions: Some(["F1", "F5", "F9", "F12"].map(String::from).to_vec()),
        population: Some(30),
        iterations: Some(200),
        runs: Some(8),
        seed: Some(1),
        ..Default::default()
    };
    let exp = cfg.resolve(Command::Bench, &Overrides::default(), None)?;
    let report = suite_report(&exp)?;
    let table = &report.table;
    print!("{:<4} {:<5}", "", "");
    for a in &table.algorithms {
        print!(" {:>11}", a.label());
    }
    println!();
    for row in &table.rows {
        let cells = |pick: &dyn Fn(usize) -> String| {
            (0..table.algorithms.len())
                .map(pick)
                .collect::<Vec<_>>()
                .join(" ")
        };
        println!(
            "{:<4} {:<5} {}",
            row.function.to_string(),
            "Best",
            cells(&|i| format!("{:>11.3e}", row.stats[i].best))
        );
        println!(
            "{:<4} {:<5} {}",
            "",
            "Ave",
            cells(&|i| format!("{:>11.3e}", row.stats[i].mean))
        );
        println!(
            "{:<4} {:<5} {}",
            "",
            "Std",
            cells(&|i| format!("{:>11.3e}", row.stats[i].std))
        );
        println!(
            "{:<4} {:<5} {}",
            "",
            "P",
            cells(&|i| format!("{:>11}", row.marks[i].map_or("", |m| m.symbol())))
        );
    }
    Ok(())
}
