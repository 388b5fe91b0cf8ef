//! Population framework shared by every optimizer: bounds, particles,
//! groups, best tracking and the seeded run loop.

use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::{self, Stream};
use crate::wdo::Coefficients;

/// Fraction of the box width used as the nominal velocity cap.
pub const DEFAULT_VMAX_SCALE: f64 = 0.2;

/// Axis-aligned search box.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidBounds("zero dimensions".into()));
        }
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch {
                expected: lower.len(),
                actual: upper.len(),
            });
        }
        for (d, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidBounds(format!(
                    "dimension {d}: lower {lo} must be below upper {hi}"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same `[lo, hi]` interval in every dimension.
    pub fn uniform(dim: usize, lo: f64, hi: f64) -> Result<Self> {
        Self::new(vec![lo; dim], vec![hi; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn width(&self, d: usize) -> f64 {
        self.upper[d] - self.lower[d]
    }

    pub fn widths(&self) -> Vec<f64> {
        (0..self.dim()).map(|d| self.width(d)).collect()
    }

    /// Length of the box diagonal, the largest distance between two points
    /// of the box.
    pub fn diagonal(&self) -> f64 {
        self.widths().iter().map(|w| w * w).sum::<f64>().sqrt()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| *v >= *lo && *v <= *hi)
    }

    /// Componentwise `min(max(x, lb), ub)`.
    pub fn clamp(&self, x: &mut [f64]) {
        for ((v, lo), hi) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            *v = v.max(*lo).min(*hi);
        }
    }

    pub(crate) fn check_dim(&self, len: usize) -> Result<()> {
        if len == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: len,
            })
        }
    }
}

/// One candidate solution (an air parcel, a wolf, a whale).
#[derive(Debug, Clone, PartialEq)]
pub struct Particle {
    pub position: Vec<f64>,
    pub velocity: Vec<f64>,
    pub fitness: f64,
    pub pbest_position: Vec<f64>,
    pub pbest_fitness: f64,
}

impl Particle {
    pub fn new(position: Vec<f64>, velocity: Vec<f64>) -> Self {
        Self {
            pbest_position: position.clone(),
            position,
            velocity,
            fitness: f64::INFINITY,
            pbest_fitness: f64::INFINITY,
        }
    }

    /// Records `fitness` for the current position and updates the personal
    /// best on strict improvement.
    pub fn record(&mut self, fitness: f64) {
        self.fitness = fitness;
        if fitness < self.pbest_fitness {
            self.pbest_fitness = fitness;
            self.pbest_position.clone_from(&self.position);
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Group {
    pub members: Vec<Particle>,
    pub gbest_position: Vec<f64>,
    pub gbest_fitness: f64,
    pub coeffs: Coefficients,
}

impl Group {
    /// Member positions' mean.
    pub fn centroid(&self) -> Vec<f64> {
        let dim = self.gbest_position.len();
        let mut c = vec![0.0; dim];
        for p in &self.members {
            for (ci, xi) in c.iter_mut().zip(&p.position) {
                *ci += xi;
            }
        }
        let n = self.members.len() as f64;
        c.iter_mut().for_each(|ci| *ci /= n);
        c
    }

    /// 1-based fitness ranks of the members (1 = best). Equal fitness keeps
    /// member order.
    pub fn ranks(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.members.len()).collect();
        order.sort_by(|&i, &j| {
            self.members[i]
                .fitness
                .total_cmp(&self.members[j].fitness)
                .then(i.cmp(&j))
        });
        let mut ranks = vec![0; order.len()];
        for (r, i) in order.into_iter().enumerate() {
            ranks[i] = r + 1;
        }
        ranks
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SwarmState {
    pub groups: Vec<Group>,
    pub tbest_position: Vec<f64>,
    pub tbest_fitness: f64,
    /// Completed iterations; the next step executes iteration `iteration + 1`.
    pub iteration: usize,
    pub max_iterations: usize,
    pub vmax: Vec<f64>,
}

impl SwarmState {
    pub fn dim(&self) -> usize {
        self.vmax.len()
    }

    pub fn population(&self) -> usize {
        self.groups.iter().map(|g| g.members.len()).sum()
    }

    pub fn group_sizes(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.members.len()).collect()
    }

    pub fn particles(&self) -> impl Iterator<Item = &Particle> {
        self.groups.iter().flat_map(|g| g.members.iter())
    }

    /// Recomputes group and global bests from the members' personal bests.
    /// Leaders only change on strict improvement, so the first-found
    /// incumbent wins ties.
    pub fn refresh_leaders(&mut self) {
        for group in &mut self.groups {
            for p in &group.members {
                if p.pbest_fitness < group.gbest_fitness {
                    group.gbest_fitness = p.pbest_fitness;
                    group.gbest_position.clone_from(&p.pbest_position);
                }
            }
            if group.gbest_fitness < self.tbest_fitness {
                self.tbest_fitness = group.gbest_fitness;
                self.tbest_position.clone_from(&group.gbest_position);
            }
        }
    }
}

/// Sizes of `groups` balanced groups for `n` particles; the remainder goes
/// to the lowest-index groups.
pub fn partition_sizes(n: usize, groups: usize) -> Vec<usize> {
    let base = n / groups;
    let extra = n % groups;
    (0..groups).map(|g| base + usize::from(g < extra)).collect()
}

/// Nominal velocity cap, a fixed fraction of each dimension's width.
pub fn default_vmax(bounds: &Bounds) -> Vec<f64> {
    bounds
        .widths()
        .iter()
        .map(|w| DEFAULT_VMAX_SCALE * w)
        .collect()
}

/// Uniformly samples `n` particles inside `bounds` with velocities in
/// `[-vmax, vmax]` and splits them into `groups` groups. Fitness values are
/// unset (`+inf`) until the first evaluation.
pub fn initialize_population(
    bounds: &Bounds,
    n: usize,
    groups: usize,
    max_iterations: usize,
    rng: &mut Stream,
) -> Result<SwarmState> {
    if groups == 0 || n < groups {
        return Err(Error::InvalidPopulation(format!(
            "need at least one particle per group (population {n}, groups {groups})"
        )));
    }
    if max_iterations == 0 {
        return Err(Error::InvalidArgument(
            "iteration budget must be >= 1".into(),
        ));
    }
    let dim = bounds.dim();
    let vmax = default_vmax(bounds);
    let groups = partition_sizes(n, groups)
        .into_iter()
        .map(|size| {
            let members = (0..size)
                .map(|_| {
                    let position = (0..dim)
                        .map(|d| rng.random_range(bounds.lower[d]..=bounds.upper[d]))
                        .collect();
                    let velocity = vmax.iter().map(|&v| rng.random_range(-v..=v)).collect();
                    Particle::new(position, velocity)
                })
                .collect::<Vec<_>>();
            Group {
                gbest_position: members[0].position.clone(),
                gbest_fitness: f64::INFINITY,
                members,
                coeffs: Coefficients::default(),
            }
        })
        .collect::<Vec<_>>();
    Ok(SwarmState {
        tbest_position: groups[0].gbest_position.clone(),
        tbest_fitness: f64::INFINITY,
        groups,
        iteration: 0,
        max_iterations,
        vmax,
    })
}

pub type EvalError = Box<dyn std::error::Error + Send + Sync>;

/// A function to minimise.
pub trait Objective {
    fn dim(&self) -> usize;

    fn evaluate(&mut self, x: &[f64]) -> std::result::Result<f64, EvalError>;
}

/// Adapts an infallible closure.
pub struct FnObjective<F> {
    dim: usize,
    f: F,
}

impl<F: FnMut(&[f64]) -> f64> FnObjective<F> {
    pub fn new(dim: usize, f: F) -> Self {
        Self { dim, f }
    }
}

impl<F: FnMut(&[f64]) -> f64> Objective for FnObjective<F> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn evaluate(&mut self, x: &[f64]) -> std::result::Result<f64, EvalError> {
        Ok((self.f)(x))
    }
}

/// Evaluates one point. Non-finite values are mapped to `+inf`; evaluator
/// failures carry the iteration and particle index.
pub fn evaluate_point(
    objective: &mut dyn Objective,
    x: &[f64],
    iteration: usize,
    particle: usize,
) -> Result<f64> {
    match objective.evaluate(x) {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(_) => Ok(f64::INFINITY),
        Err(e) => Err(Error::Objective {
            iteration,
            particle,
            message: e.to_string(),
        }),
    }
}

/// Evaluates every particle at its current position, then updates personal,
/// group and global bests.
pub fn update_bests(state: &mut SwarmState, objective: &mut dyn Objective) -> Result<()> {
    let iteration = state.iteration;
    let mut index = 0;
    for group in &mut state.groups {
        for p in &mut group.members {
            let f = evaluate_point(objective, &p.position, iteration, index)?;
            p.record(f);
            index += 1;
        }
    }
    state.refresh_leaders();
    Ok(())
}

/// A step procedure over a [`SwarmState`].
pub trait Optimizer {
    fn name(&self) -> &str;

    /// Number of groups the population is split into.
    fn group_count(&self) -> usize {
        1
    }

    /// One-off setup after initialization, before the first evaluation.
    fn prepare(&mut self, _state: &mut SwarmState, _bounds: &Bounds, _rng: &mut Stream) {}

    /// Executes iteration `state.iteration + 1`: moves the population,
    /// evaluates it and updates all bests, then increments the counter.
    fn step(
        &mut self,
        state: &mut SwarmState,
        objective: &mut dyn Objective,
        bounds: &Bounds,
        rng: &mut Stream,
    ) -> Result<()>;
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    /// Global best fitness after each iteration.
    pub trace: Vec<f64>,
    pub final_best_fitness: f64,
    pub final_best_position: Vec<f64>,
    pub seed: u64,
    pub wall_time: f64,
}

/// Initializes a population from `seed` and runs `iterations` steps.
pub fn run(
    optimizer: &mut dyn Optimizer,
    objective: &mut dyn Objective,
    bounds: &Bounds,
    population: usize,
    iterations: usize,
    seed: u64,
) -> Result<RunRecord> {
    bounds.check_dim(objective.dim())?;
    let mut rng = rng::stream_from_seed(seed);
    let state = initialize_population(
        bounds,
        population,
        optimizer.group_count(),
        iterations,
        &mut rng,
    )?;
    run_state(optimizer, objective, bounds, state, &mut rng, seed)
}

/// Runs an already initialized state to its iteration budget.
pub fn run_state(
    optimizer: &mut dyn Optimizer,
    objective: &mut dyn Objective,
    bounds: &Bounds,
    mut state: SwarmState,
    rng: &mut Stream,
    seed: u64,
) -> Result<RunRecord> {
    let started = Instant::now();
    optimizer.prepare(&mut state, bounds, rng);
    update_bests(&mut state, objective)?;
    let remaining = state.max_iterations.saturating_sub(state.iteration);
    let mut trace = Vec::with_capacity(remaining);
    for _ in 0..remaining {
        optimizer.step(&mut state, objective, bounds, rng)?;
        trace.push(state.tbest_fitness);
    }
    Ok(RunRecord {
        final_best_fitness: state.tbest_fitness,
        final_best_position: state.tbest_position,
        trace,
        seed,
        wall_time: started.elapsed().as_secs_f64(),
    })
}
