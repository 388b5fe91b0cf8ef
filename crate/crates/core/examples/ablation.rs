//! Ablation: AWDO with one enhancement at a time against full MAWDO on a
//! unimodal and a low-dimensional function.

use windplan::experiment::{suite_report, AlgorithmId, Command, ExperimentConfig, Overrides};
use windplan::wdo::Variant;

fn main() -> windplan::Result<()> {
    let cfg = ExperimentConfig {
        functions: Some(vec!["F1".into(), "F14".into()]),
        population: Some(30),
        iterations: Some(300),
        runs: Some(10),
        seed: Some(5),
        ..Default::default()
    };
    let exp = cfg.resolve(Command::Ablation, &Overrides::default(), None)?;
    let report = suite_report(&exp)?;
    for row in &report.table.rows {
        println!("{}", row.function);
        for (i, v) in Variant::ALL.iter().enumerate() {
            let mark = row.marks[i].map_or(String::new(), |m| format!("  {m}"));
            println!(
                "  {:<8} mean {:>11.4e}  std {:>10.3e}{mark}",
                v.label(),
                row.stats[i].mean,
                row.stats[i].std
            );
        }
    }
    let full = report.finals(exp.functions[0], AlgorithmId::from(Variant::Full));
    let full: Vec<String> = full.iter().map(|v| format!("{v:.2e}")).collect();
    println!(
        "full MAWDO finals on {}: {}",
        exp.functions[0],
        full.join(" ")
    );
    Ok(())
}
