//! Config-driven experiments: benchmark comparison, ablation and dynamic
//! path planning, each writing CSV tables and SVG figures.
//!
//! Run `k` of every (function, algorithm) pair uses the seed
//! `derive_seed(seed, k)`, so algorithms are compared on paired seeds and
//! the results do not depend on `jobs`. Files are written after all runs
//! finish, in a fixed order.

pub mod algorithms;
pub mod chart;
pub mod config;

use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

pub use algorithms::AlgorithmId;
pub use config::{Command, Experiment, ExperimentConfig, Overrides, OUT_ENV};

use crate::benchmarks::{self, BenchmarkObjective, FunctionId};
use crate::error::{Error, Result};
use crate::pathplan::{
    grid_reference_length, simulate_replan, snapshot_svg, PathMetrics, Simulation,
};
use crate::rng::{child_stream, derive_seed};
use crate::stats::{summarize, wilcoxon_rank_sum, Mark, StatsSummary, ALPHA};
use crate::swarm::{run, RunRecord};

/// Frames per snapshot series of a planning run.
pub const SNAPSHOTS: usize = 8;

/// Number formatting used in every CSV: shortest decimal that parses back
/// to the same value.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:?}")
}

/// One optimizer run on one benchmark function.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteRun {
    pub function: FunctionId,
    pub algorithm: AlgorithmId,
    pub run: usize,
    pub record: RunRecord,
}

/// Statistics of one function row: a summary per algorithm and the
/// rank-sum verdict of the reference algorithm against each other one.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionSummary {
    pub function: FunctionId,
    pub stats: Vec<StatsSummary>,
    /// `None` in the reference algorithm's own column.
    pub marks: Vec<Option<Mark>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryTable {
    pub algorithms: Vec<AlgorithmId>,
    /// Algorithm the marks refer to: MAWDO when present, else the last one.
    pub reference: AlgorithmId,
    pub rows: Vec<FunctionSummary>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub runs: Vec<SuiteRun>,
    pub table: SummaryTable,
}

impl SuiteReport {
    /// Final best values of `algorithm` on `function`, in run order.
    pub fn finals(&self, function: FunctionId, algorithm: AlgorithmId) -> Vec<f64> {
        finals(&self.runs, function, algorithm)
    }
}

fn finals(runs: &[SuiteRun], function: FunctionId, algorithm: AlgorithmId) -> Vec<f64> {
    runs.iter()
        .filter(|r| r.function == function && r.algorithm == algorithm)
        .map(|r| r.record.final_best_fitness)
        .collect()
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("cannot start {jobs} worker threads: {e}")))
}

/// Every run of every (function, algorithm) pair, in function, algorithm,
/// run order. Nothing is written to disk.
pub fn run_suite(exp: &Experiment) -> Result<Vec<SuiteRun>> {
    let mut tasks = Vec::new();
    for &f in &exp.functions {
        for &a in &exp.algorithms {
            for k in 0..exp.runs {
                tasks.push((f, a, k));
            }
        }
    }
    pool(exp.jobs)?.install(|| {
        tasks
            .into_par_iter()
            .map(|(function, algorithm, k)| {
                let seed = derive_seed(exp.seed, k as u64);
                let spec = benchmarks::spec(function);
                let mut optimizer = algorithm.build(&exp.strategy)?;
                let mut objective = BenchmarkObjective::new(function, child_stream(seed, 0));
                let record = run(
                    optimizer.as_mut(),
                    &mut objective,
                    &spec.bounds,
                    exp.population,
                    exp.iterations,
                    seed,
                )?;
                Ok(SuiteRun {
                    function,
                    algorithm,
                    run: k,
                    record,
                })
            })
            .collect()
    })
}

fn summary_of(values: &[f64]) -> Result<StatsSummary> {
    match values {
        [only] => Ok(StatsSummary {
            best: *only,
            mean: *only,
            std: f64::NAN,
            n_runs: 1,
        }),
        _ => summarize(values),
    }
}

/// Best, mean, standard deviation and rank-sum marks per function.
pub fn summary_table(
    runs: &[SuiteRun],
    functions: &[FunctionId],
    algorithms: &[AlgorithmId],
) -> Result<SummaryTable> {
    let reference = if algorithms.contains(&AlgorithmId::Mawdo) {
        AlgorithmId::Mawdo
    } else {
        *algorithms
            .last()
            .ok_or_else(|| Error::InvalidConfig("no algorithms".into()))?
    };
    let mut rows = Vec::with_capacity(functions.len());
    for &function in functions {
        let ref_finals = finals(runs, function, reference);
        let mut stats = Vec::with_capacity(algorithms.len());
        let mut marks = Vec::with_capacity(algorithms.len());
        for &a in algorithms {
            let values = finals(runs, function, a);
            stats.push(summary_of(&values)?);
            marks.push(if a == reference {
                None
            } else {
                Some(wilcoxon_rank_sum(&ref_finals, &values, ALPHA)?.mark)
            });
        }
        rows.push(FunctionSummary {
            function,
            stats,
            marks,
        });
    }
    Ok(SummaryTable {
        algorithms: algorithms.to_vec(),
        reference,
        rows,
    })
}

fn create_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

fn write_csv(
    path: &Path,
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

/// Rows `Best`, `Ave`, `Std` and `P` per function, one column per
/// algorithm.
pub fn write_summary_csv(path: &Path, table: &SummaryTable) -> Result<()> {
    let mut header = vec!["Function", "Index"];
    header.extend(table.algorithms.iter().map(|a| a.label()));
    let mut rows = Vec::new();
    for r in &table.rows {
        let f = r.function.to_string();
        let mut line = |index: &str, cells: Vec<String>| {
            let mut row = vec![f.clone(), index.to_string()];
            row.extend(cells);
            rows.push(row);
        };
        line("Best", r.stats.iter().map(|s| fmt_f64(s.best)).collect());
        line("Ave", r.stats.iter().map(|s| fmt_f64(s.mean)).collect());
        line("Std", r.stats.iter().map(|s| fmt_f64(s.std)).collect());
        line(
            "P",
            r.marks
                .iter()
                .map(|m| m.map(|m| m.symbol().to_string()).unwrap_or_default())
                .collect(),
        );
    }
    write_csv(path, &header, rows)
}

fn write_finals_csv(path: &Path, runs: &[SuiteRun]) -> Result<()> {
    write_csv(
        path,
        &["Function", "Algorithm", "Run", "Seed", "Final"],
        runs.iter().map(|r| {
            vec![
                r.function.to_string(),
                r.algorithm.label().to_string(),
                r.run.to_string(),
                r.record.seed.to_string(),
                fmt_f64(r.record.final_best_fitness),
            ]
        }),
    )
}

/// Mean best-so-far value per iteration over the runs of each algorithm.
pub fn mean_trace(runs: &[SuiteRun], function: FunctionId, algorithm: AlgorithmId) -> Vec<f64> {
    let traces: Vec<&Vec<f64>> = runs
        .iter()
        .filter(|r| r.function == function && r.algorithm == algorithm)
        .map(|r| &r.record.trace)
        .collect();
    let len = traces.iter().map(|t| t.len()).min().unwrap_or(0);
    (0..len)
        .map(|i| traces.iter().map(|t| t[i]).sum::<f64>() / traces.len() as f64)
        .collect()
}

fn write_convergence(dir: &Path, runs: &[SuiteRun], exp: &Experiment) -> Result<()> {
    let mut rows = Vec::new();
    for &f in &exp.functions {
        let mut series = Vec::new();
        for &a in &exp.algorithms {
            let trace = mean_trace(runs, f, a);
            rows.extend(trace.iter().enumerate().map(|(i, v)| {
                vec![
                    f.to_string(),
                    a.label().to_string(),
                    (i + 1).to_string(),
                    fmt_f64(*v),
                ]
            }));
            series.push((a.label().to_string(), trace));
        }
        let svg = chart::convergence_svg(&format!("{f} mean best fitness"), "fitness", &series);
        write_text(&dir.join(format!("convergence_{f}.svg")), &svg)?;
    }
    write_csv(
        &dir.join("convergence.csv"),
        &["Function", "Algorithm", "Iteration", "Mean"],
        rows,
    )
}

/// Runs and summary table of a bench or ablation experiment, without
/// writing files.
pub fn suite_report(exp: &Experiment) -> Result<SuiteReport> {
    let runs = run_suite(exp)?;
    let table = summary_table(&runs, &exp.functions, &exp.algorithms)?;
    Ok(SuiteReport { runs, table })
}

/// Benchmark comparison. Writes `summary.csv`, `finals.csv`,
/// `convergence.csv` and `convergence_<F>.svg` per function.
pub fn run_bench(exp: &Experiment) -> Result<SuiteReport> {
    let report = suite_report(exp)?;
    let dir = &exp.output_dir;
    create_dir(dir)?;
    write_summary_csv(&dir.join("summary.csv"), &report.table)?;
    write_finals_csv(&dir.join("finals.csv"), &report.runs)?;
    write_convergence(dir, &report.runs, exp)?;
    Ok(report)
}

/// Ablation study over the single-enhancement presets and full MAWDO.
/// Writes `ablation.csv` in the summary layout and `finals.csv`.
pub fn run_ablation(exp: &Experiment) -> Result<SuiteReport> {
    let report = suite_report(exp)?;
    let dir = &exp.output_dir;
    create_dir(dir)?;
    write_summary_csv(&dir.join("ablation.csv"), &report.table)?;
    write_finals_csv(&dir.join("finals.csv"), &report.runs)?;
    Ok(report)
}

/// One receding-horizon simulation.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanRun {
    pub algorithm: AlgorithmId,
    pub run: usize,
    pub seed: u64,
    pub simulation: Simulation,
    pub metrics: PathMetrics,
}

/// Mean metrics of one algorithm over all its runs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PlanSummary {
    pub length: f64,
    pub optimality_gap: f64,
    pub smoothness: f64,
    /// Runs that reached the goal without a collision.
    pub successes: usize,
    pub runs: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlanReport {
    pub reference_length: f64,
    pub runs: Vec<PlanRun>,
    pub summaries: Vec<(AlgorithmId, PlanSummary)>,
}

impl PlanReport {
    pub fn summary(&self, algorithm: AlgorithmId) -> Option<&PlanSummary> {
        self.summaries
            .iter()
            .find(|(a, _)| *a == algorithm)
            .map(|(_, s)| s)
    }

    /// The run shown in snapshots: a collision-free arrival if any, then
    /// the shortest.
    pub fn best_run(&self, algorithm: AlgorithmId) -> Option<&PlanRun> {
        self.runs
            .iter()
            .filter(|r| r.algorithm == algorithm)
            .min_by(|a, b| {
                let key = |r: &PlanRun| (!r.simulation.reached, r.simulation.collisions);
                key(a)
                    .cmp(&key(b))
                    .then(a.metrics.length.total_cmp(&b.metrics.length))
                    .then(a.run.cmp(&b.run))
            })
    }
}

/// Simulations only, without writing files.
pub fn plan_runs(exp: &Experiment) -> Result<(f64, Vec<PlanRun>)> {
    let scenario = exp
        .scenario
        .as_ref()
        .ok_or_else(|| Error::InvalidConfig("plan experiment without a scenario".into()))?;
    let reference = grid_reference_length(
        &scenario.map,
        &scenario.obstacles,
        scenario.map.start,
        scenario.map.goal,
    )?;
    let mut tasks = Vec::new();
    for &a in &exp.algorithms {
        for k in 0..exp.runs {
            tasks.push((a, k));
        }
    }
    let runs = pool(exp.jobs)?.install(|| {
        tasks
            .into_par_iter()
            .map(|(algorithm, k)| {
                let seed = derive_seed(exp.seed, k as u64);
                let mut optimizer = algorithm.build(&exp.strategy)?;
                let simulation = simulate_replan(scenario, optimizer.as_mut(), &exp.planner, seed)?;
                let metrics = simulation.metrics(reference);
                Ok(PlanRun {
                    algorithm,
                    run: k,
                    seed,
                    simulation,
                    metrics,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    Ok((reference, runs))
}

fn plan_summary(runs: &[PlanRun], algorithm: AlgorithmId) -> PlanSummary {
    let mine: Vec<&PlanRun> = runs.iter().filter(|r| r.algorithm == algorithm).collect();
    let n = mine.len() as f64;
    let mean = |f: fn(&PathMetrics) -> f64| mine.iter().map(|r| f(&r.metrics)).sum::<f64>() / n;
    PlanSummary {
        length: mean(|m| m.length),
        optimality_gap: mean(|m| m.optimality_gap),
        smoothness: mean(|m| m.smoothness),
        successes: mine
            .iter()
            .filter(|r| r.simulation.reached && r.simulation.collisions == 0)
            .count(),
        runs: mine.len(),
    }
}

/// Timesteps of the evenly spaced snapshot frames of a run lasting `steps`.
pub fn snapshot_times(steps: usize) -> Vec<usize> {
    (0..SNAPSHOTS)
        .map(|i| ((i * steps) as f64 / (SNAPSHOTS - 1) as f64).round() as usize)
        .collect()
}

fn write_snapshots(dir: &Path, exp: &Experiment, run: &PlanRun) -> Result<()> {
    let scenario = exp.scenario.as_ref().expect("checked by plan_runs");
    let sim = &run.simulation;
    let mut world = scenario.clone();
    let mut now = 0;
    for (i, t) in snapshot_times(sim.steps).into_iter().enumerate() {
        while now < t {
            crate::pathplan::advance_obstacles(&mut world);
            now += 1;
        }
        let driven: Vec<_> = sim
            .trajectory
            .iter()
            .filter(|p| p.timestep <= t)
            .map(|p| p.point())
            .collect();
        let title = format!("{} run {} t = {t}", run.algorithm.label(), run.run);
        let svg = snapshot_svg(&world.map, &world.obstacles, &driven, &title);
        write_text(
            &dir.join(format!("snapshot_{}_{}.svg", run.algorithm.name(), i + 1)),
            &svg,
        )?;
    }
    Ok(())
}

/// Dynamic path planning comparison. Writes `metrics.csv` (means per
/// algorithm), `runs.csv`, `trajectory_<alg>_run<k>.csv` per run, eight
/// `snapshot_<alg>_<i>.svg` frames of each algorithm's best run, and the
/// first-plan cost curves of those runs in `plan_convergence.csv` and
/// `convergence.svg`.
pub fn run_plan(exp: &Experiment) -> Result<PlanReport> {
    let (reference_length, runs) = plan_runs(exp)?;
    let summaries: Vec<_> = exp
        .algorithms
        .iter()
        .map(|&a| (a, plan_summary(&runs, a)))
        .collect();
    let report = PlanReport {
        reference_length,
        runs,
        summaries,
    };
    let dir = &exp.output_dir;
    create_dir(dir)?;
    write_csv(
        &dir.join("metrics.csv"),
        &["Algorithm", "Length", "Optimality Gap", "Smooth"],
        report.summaries.iter().map(|(a, s)| {
            vec![
                a.label().to_string(),
                fmt_f64(s.length),
                fmt_f64(s.optimality_gap),
                fmt_f64(s.smoothness),
            ]
        }),
    )?;
    write_csv(
        &dir.join("runs.csv"),
        &[
            "Algorithm",
            "Run",
            "Seed",
            "Reached",
            "Steps",
            "Collisions",
            "Length",
            "Optimality Gap",
            "Smooth",
        ],
        report.runs.iter().map(|r| {
            vec![
                r.algorithm.label().to_string(),
                r.run.to_string(),
                r.seed.to_string(),
                r.simulation.reached.to_string(),
                r.simulation.steps.to_string(),
                r.simulation.collisions.to_string(),
                fmt_f64(r.metrics.length),
                fmt_f64(r.metrics.optimality_gap),
                fmt_f64(r.metrics.smoothness),
            ]
        }),
    )?;
    for r in &report.runs {
        write_csv(
            &dir.join(format!(
                "trajectory_{}_run{}.csv",
                r.algorithm.name(),
                r.run
            )),
            &["timestep", "x", "y"],
            r.simulation
                .trajectory
                .iter()
                .map(|p| vec![p.timestep.to_string(), fmt_f64(p.x), fmt_f64(p.y)]),
        )?;
    }
    let mut series = Vec::new();
    let mut rows = Vec::new();
    for &a in &exp.algorithms {
        let best = report.best_run(a).expect("runs >= 1");
        write_snapshots(dir, exp, best)?;
        let trace = best.simulation.first_trace.clone();
        rows.extend(trace.iter().enumerate().map(|(i, v)| {
            vec![
                a.label().to_string(),
                best.run.to_string(),
                (i + 1).to_string(),
                fmt_f64(*v),
            ]
        }));
        series.push((a.label().to_string(), trace));
    }
    write_csv(
        &dir.join("plan_convergence.csv"),
        &["Algorithm", "Run", "Iteration", "Cost"],
        rows,
    )?;
    write_text(
        &dir.join("convergence.svg"),
        &chart::convergence_svg("first plan cost", "cost", &series),
    )?;
    Ok(report)
}

/// Runs the experiment's command.
pub fn execute(exp: &Experiment) -> Result<()> {
    match exp.command {
        Command::Bench => run_bench(exp).map(drop),
        Command::Ablation => run_ablation(exp).map(drop),
        Command::Plan => run_plan(exp).map(drop),
    }
}
