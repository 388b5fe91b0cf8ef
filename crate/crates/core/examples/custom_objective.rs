//! Any closure can be optimized. Switch MAWDO enhancements on and off
//! through `StrategyConfig` and compare on a shifted ellipsoid.

use windplan::swarm::{run, Bounds, FnObjective};
use windplan::wdo::{Mawdo, StrategyConfig};

fn main() -> windplan::Result<()> {
    let dim = 10;
    let bounds = Bounds::uniform(dim, -50.0, 50.0)?;
    let ellipsoid = |x: &[f64]| -> f64 {
        x.iter()
            .enumerate()
            .map(|(i, v)| (i + 1) as f64 * (v - 1.5).powi(2))
            .sum()
    };

    let settings = [
        ("full", StrategyConfig::mawdo()),
        (
            "no restart",
            StrategyConfig {
                use_pgr: false,
                use_obl: false,
                ..StrategyConfig::mawdo()
            },
        ),
        (
            "one group",
            StrategyConfig {
                group_count: 1,
                ..StrategyConfig::mawdo()
            },
        ),
        (
            "no guidance",
            StrategyConfig {
                use_hierarchical_guidance: false,
                ..StrategyConfig::mawdo()
            },
        ),
    ];
    for (label, cfg) in settings {
        let mut opt = Mawdo::new(cfg)?;
        let record = run(
            &mut opt,
            &mut FnObjective::new(dim, ellipsoid),
            &bounds,
            48,
            300,
            11,
        )?;
        let x0 = record.final_best_position[0];
        println!(
            "{label:>12}: f = {:.3e}, x[0] = {x0:.6}",
            record.final_best_fitness
        );
    }
    Ok(())
}
