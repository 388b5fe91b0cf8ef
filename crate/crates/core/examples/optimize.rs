//! Minimize one benchmark function with WDO, AWDO and MAWDO from the same
//! seed and print how the best value falls.
//!
//! cargo run --release --example optimize -- F9

use windplan::benchmarks::{spec, BenchmarkObjective, FunctionId};
use windplan::rng::child_stream;
use windplan::swarm::{run, Optimizer};
use windplan::wdo::{Awdo, Mawdo, Wdo};

fn main() -> windplan::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "F9".into());
    let id: FunctionId = name.parse()?;
    let bounds = spec(id).bounds;
    let seed = 7;
    let optimizers: Vec<Box<dyn Optimizer>> = vec![
        Box::new(Wdo::default()),
        Box::new(Awdo),
        Box::new(Mawdo::default()),
    ];
    for mut opt in optimizers {
        let mut objective = BenchmarkObjective::new(id, child_stream(seed, 0));
        let record = run(opt.as_mut(), &mut objective, &bounds, 50, 500, seed)?;
        let at = |t: usize| record.trace[t.min(record.trace.len() - 1)];
        println!(
            "{id} {:>5}: it50 {:.3e}  it250 {:.3e}  final {:.3e}",
            opt.name(),
            at(49),
            at(249),
            record.final_best_fitness
        );
    }
    Ok(())
}
