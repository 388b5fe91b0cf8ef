//! Grey wolf and whale optimization in their original formulations, used
//! as comparison optimizers. Both run as a single group on the shared
//! [`SwarmState`]; velocities are unused.

use std::f64::consts::PI;

use rand::Rng;

use crate::error::Result;
use crate::rng::Stream;
use crate::swarm::{update_bests, Bounds, Objective, Optimizer, SwarmState};

/// Control parameter shared by both algorithms: decreases linearly from 2
/// to 0 over the run.
pub fn control_parameter(t: usize, max_t: usize) -> f64 {
    2.0 * (1.0 - t as f64 / max_t as f64)
}

#[derive(Debug, Clone)]
struct Leader {
    position: Vec<f64>,
    score: f64,
}

impl Default for Leader {
    fn default() -> Self {
        Self {
            position: Vec::new(),
            score: f64::INFINITY,
        }
    }
}

/// Grey wolf optimizer with alpha, beta and delta leaders.
#[derive(Debug, Clone, Default)]
pub struct Gwo {
    alpha: Leader,
    beta: Leader,
    delta: Leader,
}

impl Gwo {
    /// Leader update in the original form: a wolf only takes the first
    /// rank it beats, without demoting the displaced leaders.
    fn update_leaders(&mut self, state: &SwarmState) {
        for p in state.particles() {
            let f = p.fitness;
            if f < self.alpha.score {
                self.alpha.score = f;
                self.alpha.position.clone_from(&p.position);
            }
            if f > self.alpha.score && f < self.beta.score {
                self.beta.score = f;
                self.beta.position.clone_from(&p.position);
            }
            if f > self.alpha.score && f > self.beta.score && f < self.delta.score {
                self.delta.score = f;
                self.delta.position.clone_from(&p.position);
            }
        }
    }

    pub fn leaders(&self) -> [(&[f64], f64); 3] {
        [
            (&self.alpha.position, self.alpha.score),
            (&self.beta.position, self.beta.score),
            (&self.delta.position, self.delta.score),
        ]
    }
}

/// One leader-guided candidate coordinate: `leader - A·|C·leader - x|`.
pub fn gwo_candidate(x: f64, leader: f64, a: f64, r1: f64, r2: f64) -> f64 {
    let big_a = 2.0 * a * r1 - a;
    let c = 2.0 * r2;
    leader - big_a * (c * leader - x).abs()
}

impl Optimizer for Gwo {
    fn name(&self) -> &str {
        "gwo"
    }

    fn prepare(&mut self, _state: &mut SwarmState, _bounds: &Bounds, _rng: &mut Stream) {
        *self = Self::default();
    }

    fn step(
        &mut self,
        state: &mut SwarmState,
        objective: &mut dyn Objective,
        bounds: &Bounds,
        rng: &mut Stream,
    ) -> Result<()> {
        self.update_leaders(state);
        // until three distinct scores are seen, missing leaders fall back to
        // the alpha
        let alpha = self.alpha.position.clone();
        let beta = fallback(&self.beta.position, &alpha);
        let delta = fallback(&self.delta.position, &alpha);
        let a = control_parameter(state.iteration + 1, state.max_iterations);
        for group in &mut state.groups {
            for p in &mut group.members {
                for d in 0..p.position.len() {
                    let x = p.position[d];
                    let x1 = gwo_candidate(x, alpha[d], a, rng.random(), rng.random());
                    let x2 = gwo_candidate(x, beta[d], a, rng.random(), rng.random());
                    let x3 = gwo_candidate(x, delta[d], a, rng.random(), rng.random());
                    p.position[d] = (x1 + x2 + x3) / 3.0;
                }
                bounds.clamp(&mut p.position);
            }
        }
        update_bests(state, objective)?;
        state.iteration += 1;
        Ok(())
    }
}

fn fallback(position: &[f64], alpha: &[f64]) -> Vec<f64> {
    if position.is_empty() {
        alpha.to_vec()
    } else {
        position.to_vec()
    }
}

/// Whale optimization algorithm with spiral constant `b = 1`.
#[derive(Debug, Clone, Default)]
pub struct Woa;

/// Shrinking-encircling move toward `best` (or toward a random whale when
/// `|A| >= 1`).
pub fn woa_encircle(x: f64, target: f64, big_a: f64, c: f64) -> f64 {
    target - big_a * (c * target - x).abs()
}

/// Logarithmic spiral around `best`.
pub fn woa_spiral(x: f64, best: f64, l: f64) -> f64 {
    const B: f64 = 1.0;
    (best - x).abs() * (B * l).exp() * (2.0 * PI * l).cos() + best
}

impl Optimizer for Woa {
    fn name(&self) -> &str {
        "woa"
    }

    fn step(
        &mut self,
        state: &mut SwarmState,
        objective: &mut dyn Objective,
        bounds: &Bounds,
        rng: &mut Stream,
    ) -> Result<()> {
        let a = control_parameter(state.iteration + 1, state.max_iterations);
        let best = state.tbest_position.clone();
        let snapshot: Vec<Vec<f64>> = state.particles().map(|p| p.position.clone()).collect();
        let n = snapshot.len();
        for group in &mut state.groups {
            for p in &mut group.members {
                let r1: f64 = rng.random();
                let r2: f64 = rng.random();
                let big_a = 2.0 * a * r1 - a;
                let c = 2.0 * r2;
                let l: f64 = rng.random_range(-1.0..=1.0);
                let explore: f64 = rng.random();
                for d in 0..p.position.len() {
                    let x = p.position[d];
                    p.position[d] = if explore < 0.5 {
                        if big_a.abs() >= 1.0 {
                            let other = &snapshot[rng.random_range(0..n)];
                            woa_encircle(x, other[d], big_a, c)
                        } else {
                            woa_encircle(x, best[d], big_a, c)
                        }
                    } else {
                        woa_spiral(x, best[d], l)
                    };
                }
                bounds.clamp(&mut p.position);
            }
        }
        update_bests(state, objective)?;
        state.iteration += 1;
        Ok(())
    }
}
