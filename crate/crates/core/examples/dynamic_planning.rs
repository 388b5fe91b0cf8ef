//! Drive a robot through the shipped scenario of moving circles and static
//! blocks, replanning with MAWDO at every step, and save the final frame.
//!
//! cargo run --release --example dynamic_planning -- [scenario.json] [population]

use windplan::pathplan::{
    grid_reference_length, simulate_replan, snapshot_svg, PlannerConfig, ScenarioState,
};
use windplan::wdo::Mawdo;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let scenario = match args.next() {
        Some(path) => ScenarioState::load(path)?,
        None => ScenarioState::default_scenario(),
    };
    let population = args.next().map_or(Ok(1360), |p| p.parse())?;
    let cfg = PlannerConfig {
        population,
        ..PlannerConfig::default()
    };
    let map = scenario.map.clone();
    let reference = grid_reference_length(&map, &scenario.obstacles, map.start, map.goal)?;

    let sim = simulate_replan(&scenario, &mut Mawdo::default(), &cfg, 3)?;
    let m = sim.metrics(reference);
    println!(
        "reached {} after {} steps, length {:.1} (grid {:.1}, gap {:.3}), turning {:.3}, collisions {}",
        sim.reached, sim.steps, m.length, reference, m.optimality_gap, m.smoothness, m.collisions
    );

    let svg = snapshot_svg(
        &map,
        &scenario.obstacles_after(sim.steps),
        &sim.points(),
        "MAWDO",
    );
    let path = std::env::temp_dir().join("windplan_dynamic_planning.svg");
    std::fs::write(&path, svg)?;
    println!("final frame: {}", path.display());
    Ok(())
}
