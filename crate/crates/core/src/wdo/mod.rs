//! Wind driven optimization: the classic WDO, the adaptive AWDO and the
//! multi-hierarchical MAWDO.
//!
//! MAWDO splits the population into groups, steers each particle toward a
//! blend of its personal, group and global bests, re-seeds the worst
//! particles around the global best at fixed intervals (keeping the better
//! of each restart and its opposite point), reflects out-of-range particles
//! with damping, and in low dimensions gives every group its own
//! coefficients, a tighter speed limit and gravity toward the group
//! centroid. Every enhancement is switchable through [`StrategyConfig`].

mod operators;
mod strategy;

pub use operators::*;
pub use strategy::{StrategyConfig, Variant};

use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::Result;
use crate::rng::Stream;
use crate::swarm::{evaluate_point, update_bests, Bounds, Objective, Optimizer, SwarmState};

/// Classic WDO with fixed coefficients and clamped boundaries.
#[derive(Debug, Clone, Default)]
pub struct Wdo {
    pub coeffs: Coefficients,
}

impl Optimizer for Wdo {
    fn name(&self) -> &str {
        "wdo"
    }

    fn step(
        &mut self,
        state: &mut SwarmState,
        objective: &mut dyn Objective,
        bounds: &Bounds,
        rng: &mut Stream,
    ) -> Result<()> {
        let dim = state.dim();
        let tbest = state.tbest_position.clone();
        for group in &mut state.groups {
            for p in &mut group.members {
                let perm = random_permutation(dim, rng);
                let input = VelocityInput {
                    velocity: &p.velocity,
                    position: &p.position,
                    guide: &tbest,
                    perm: &perm,
                    vmax: &state.vmax,
                };
                let gravity = box_gravity(&p.position, bounds, self.coeffs.g);
                p.velocity = velocity_with_gravity(input, &gravity, self.coeffs, 1.0)?;
                move_in_unit_frame(&mut p.position, &p.velocity, bounds);
                bounds.clamp(&mut p.position);
            }
        }
        update_bests(state, objective)?;
        state.iteration += 1;
        Ok(())
    }
}

/// AWDO: coefficients redrawn from `U[0, 1]` every iteration, rank-scaled
/// pressure and Coriolis terms, clamped boundaries.
#[derive(Debug, Clone, Default)]
pub struct Awdo;

impl Optimizer for Awdo {
    fn name(&self) -> &str {
        "awdo"
    }

    fn step(
        &mut self,
        state: &mut SwarmState,
        objective: &mut dyn Objective,
        bounds: &Bounds,
        rng: &mut Stream,
    ) -> Result<()> {
        let dim = state.dim();
        let tbest = state.tbest_position.clone();
        for group in &mut state.groups {
            let coeffs = Coefficients::sample_unit(rng);
            group.coeffs = coeffs;
            let ranks = group.ranks();
            for (p, rank) in group.members.iter_mut().zip(ranks) {
                let perm = random_permutation(dim, rng);
                let input = VelocityInput {
                    velocity: &p.velocity,
                    position: &p.position,
                    guide: &tbest,
                    perm: &perm,
                    vmax: &state.vmax,
                };
                let gravity = box_gravity(&p.position, bounds, coeffs.g);
                p.velocity = velocity_with_gravity(input, &gravity, coeffs, rank as f64)?;
                move_in_unit_frame(&mut p.position, &p.velocity, bounds);
                bounds.clamp(&mut p.position);
            }
        }
        update_bests(state, objective)?;
        state.iteration += 1;
        Ok(())
    }
}

/// Multi-hierarchical adaptive WDO.
#[derive(Debug, Clone)]
pub struct Mawdo {
    cfg: StrategyConfig,
    name: String,
}

impl Default for Mawdo {
    fn default() -> Self {
        Self::variant(Variant::Full)
    }
}

impl Mawdo {
    pub fn new(cfg: StrategyConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Self {
            cfg,
            name: "mawdo".into(),
        })
    }

    pub fn variant(variant: Variant) -> Self {
        Self {
            cfg: StrategyConfig::preset(variant),
            name: variant.label().to_ascii_lowercase(),
        }
    }

    pub fn config(&self) -> &StrategyConfig {
        &self.cfg
    }

    fn base_weights(&self, t: usize, max_t: usize) -> Result<GuidanceWeights> {
        if self.cfg.use_scheduled_mixing {
            scheduled_weights(t, max_t)
        } else {
            Ok(GuidanceWeights::INITIAL)
        }
    }

    fn handle_bounds(&self, x: &mut [f64], u: &mut [f64], bounds: &Bounds) {
        if self.cfg.use_reflect_damp {
            reflect_damp(x, u, bounds, self.cfg.eta);
        } else {
            bounds.clamp(x);
        }
    }
}

impl Optimizer for Mawdo {
    fn name(&self) -> &str {
        &self.name
    }

    fn group_count(&self) -> usize {
        self.cfg.group_count
    }

    fn prepare(&mut self, state: &mut SwarmState, _bounds: &Bounds, rng: &mut Stream) {
        let dim = state.dim();
        if !self.cfg.lowdim_active(dim) {
            return;
        }
        for group in &mut state.groups {
            group.coeffs = Coefficients::sample_group(rng);
        }
        state.vmax = tighten_vmax(
            &state.vmax,
            dim,
            self.cfg.lowdim_threshold,
            self.cfg.vmax_scale_lowdim,
        );
        let vmax = state.vmax.clone();
        for group in &mut state.groups {
            for p in &mut group.members {
                for (u, v) in p.velocity.iter_mut().zip(&vmax) {
                    *u = u.clamp(-v, *v);
                }
            }
        }
    }

    fn step(
        &mut self,
        state: &mut SwarmState,
        objective: &mut dyn Objective,
        bounds: &Bounds,
        rng: &mut Stream,
    ) -> Result<()> {
        let dim = state.dim();
        let t = state.iteration + 1;
        let max_t = state.max_iterations;
        let lowdim = self.cfg.lowdim_active(dim);
        let weights = self.base_weights(t, max_t)?;
        let d_max = bounds.diagonal();
        let tbest = state.tbest_position.clone();
        let centre: Vec<f64> = bounds
            .lower()
            .iter()
            .zip(bounds.upper())
            .map(|(lo, hi)| 0.5 * (lo + hi))
            .collect();

        for group in &mut state.groups {
            let coeffs = if lowdim {
                group.coeffs
            } else {
                let c = Coefficients::sample_unit(rng);
                group.coeffs = c;
                c
            };
            let w = if self.cfg.use_distance_gate {
                GuidanceWeights {
                    w3: distance_gate(&group.gbest_position, &tbest, d_max, weights.w3),
                    ..weights
                }
            } else {
                weights
            };
            let ranks = group.ranks();
            let centroid = lowdim.then(|| group.centroid());
            let gbest = group.gbest_position.clone();

            for (p, rank) in group.members.iter_mut().zip(ranks) {
                let guide = if self.cfg.use_hierarchical_guidance {
                    compose_guidance_about(&centre, &p.pbest_position, &gbest, &tbest, w)?
                } else {
                    gbest.clone()
                };
                let perm = random_permutation(dim, rng);
                let gravity: Vec<f64> = match &centroid {
                    Some(c) => p
                        .position
                        .iter()
                        .zip(c)
                        .map(|(x, m)| -coeffs.g * (x - m))
                        .collect(),
                    None => box_gravity(&p.position, bounds, coeffs.g),
                };
                let input = VelocityInput {
                    velocity: &p.velocity,
                    position: &p.position,
                    guide: &guide,
                    perm: &perm,
                    vmax: &state.vmax,
                };
                p.velocity = velocity_with_gravity(input, &gravity, coeffs, rank as f64)?;
                move_in_unit_frame(&mut p.position, &p.velocity, bounds);
                self.handle_bounds(&mut p.position, &mut p.velocity, bounds);
            }
        }

        update_bests(state, objective)?;
        if self.cfg.use_pgr && t % self.cfg.pgr_interval == 0 {
            periodic_guided_restart(state, objective, &self.cfg, bounds, t, rng)?;
        }
        state.iteration += 1;
        Ok(())
    }
}

/// Re-seeds the worst `ceil(pgr_fraction * size)` particles of every group
/// from a normal distribution around the global best with the decayed
/// spread for iteration `t`. With opposition-based learning on, the
/// opposite point of each restart is evaluated too and the better of the
/// two kept. Restarted particles start at rest with their personal best
/// reset to the new position. Returns how many particles were replaced.
pub fn periodic_guided_restart(
    state: &mut SwarmState,
    objective: &mut dyn Objective,
    cfg: &StrategyConfig,
    bounds: &Bounds,
    t: usize,
    rng: &mut Stream,
) -> Result<usize> {
    let sigma = restart_sigma(
        bounds,
        t,
        state.max_iterations,
        cfg.sigma0_scale,
        cfg.sigma_end_scale,
    );
    let tbest = state.tbest_position.clone();
    let mut replaced = 0;
    let mut offset = 0;
    for group in &mut state.groups {
        let size = group.members.len();
        let count = restart_count(size, cfg.pgr_fraction);
        let mut order: Vec<usize> = (0..size).collect();
        // worst first; among equals the later member goes first
        order.sort_by(|&i, &j| {
            group.members[j]
                .fitness
                .total_cmp(&group.members[i].fitness)
                .then(j.cmp(&i))
        });
        for &i in &order[..count] {
            let mut x: Vec<f64> = tbest
                .iter()
                .zip(&sigma)
                .map(|(m, s)| m + s * rng.sample::<f64, _>(StandardNormal))
                .collect();
            let mut u = vec![0.0; x.len()];
            if cfg.use_reflect_damp {
                reflect_damp(&mut x, &mut u, bounds, cfg.eta);
            } else {
                bounds.clamp(&mut x);
            }
            let mut f = evaluate_point(objective, &x, state.iteration, offset + i)?;
            if cfg.use_obl {
                let opposite = opposite_candidate(&x, bounds);
                let fo = evaluate_point(objective, &opposite, state.iteration, offset + i)?;
                if fo < f {
                    x = opposite;
                    f = fo;
                }
            }
            let p = &mut group.members[i];
            p.velocity.iter_mut().for_each(|v| *v = 0.0);
            p.pbest_position.clone_from(&x);
            p.pbest_fitness = f;
            p.position = x;
            p.fitness = f;
            replaced += 1;
        }
        offset += size;
    }
    state.refresh_leaders();
    Ok(replaced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream_from_seed;
    use crate::swarm::{initialize_population, run, run_state, FnObjective};

    fn sphere(dim: usize) -> FnObjective<impl FnMut(&[f64]) -> f64> {
        FnObjective::new(dim, |x: &[f64]| x.iter().map(|v| v * v).sum())
    }

    #[test]
    fn disabled_mawdo_matches_awdo_trace() {
        let bounds = Bounds::uniform(10, -100.0, 100.0).unwrap();
        for seed in 0..3 {
            let a = run(&mut Awdo, &mut sphere(10), &bounds, 20, 60, seed).unwrap();
            let mut m = Mawdo::new(StrategyConfig::awdo()).unwrap();
            let b = run(&mut m, &mut sphere(10), &bounds, 20, 60, seed).unwrap();
            assert_eq!(a.trace, b.trace);
            assert_eq!(a.final_best_position, b.final_best_position);
        }
    }

    #[test]
    fn sphere_converges_deep() {
        let bounds = Bounds::uniform(30, -100.0, 100.0).unwrap();
        for seed in 0..3 {
            let mut m = Mawdo::new(StrategyConfig::mawdo()).unwrap();
            let r = run(&mut m, &mut sphere(30), &bounds, 50, 200, seed).unwrap();
            assert!(
                r.final_best_fitness < 1e-10,
                "seed {seed}: {}",
                r.final_best_fitness
            );
        }
    }

    struct Counting {
        dim: usize,
        evals: usize,
    }

    impl Objective for Counting {
        fn dim(&self) -> usize {
            self.dim
        }
        fn evaluate(&mut self, x: &[f64]) -> std::result::Result<f64, crate::swarm::EvalError> {
            self.evals += 1;
            Ok(x.iter().map(|v| v * v).sum())
        }
    }

    #[test]
    fn restart_fires_only_on_interval() {
        let bounds = Bounds::uniform(5, -10.0, 10.0).unwrap();
        let cfg = StrategyConfig {
            pgr_interval: 7,
            ..StrategyConfig::mawdo()
        };
        let mut rng = stream_from_seed(4);
        let mut state = initialize_population(&bounds, 50, 8, 30, &mut rng).unwrap();
        let mut f = Counting { dim: 5, evals: 0 };
        let mut m = Mawdo::new(cfg).unwrap();
        update_bests(&mut state, &mut f).unwrap();
        for t in 1..=14 {
            let before = f.evals;
            m.step(&mut state, &mut f, &bounds, &mut rng).unwrap();
            // one restart per group of 6 or 7, each costing the restart
            // point plus its opposite
            let expected = if t % 7 == 0 { 50 + 2 * 8 } else { 50 };
            assert_eq!(f.evals - before, expected, "step {t}");
        }
    }

    #[test]
    fn restart_replaces_ceiling_count() {
        let bounds = Bounds::uniform(3, -1.0, 1.0).unwrap();
        let mut rng = stream_from_seed(8);
        let mut state = initialize_population(&bounds, 50, 8, 100, &mut rng).unwrap();
        update_bests(&mut state, &mut sphere(3)).unwrap();
        let n = periodic_guided_restart(
            &mut state,
            &mut sphere(3),
            &StrategyConfig::mawdo(),
            &bounds,
            50,
            &mut rng,
        )
        .unwrap();
        assert_eq!(n, 8);
        let cfg = StrategyConfig {
            pgr_fraction: 0.5,
            ..StrategyConfig::mawdo()
        };
        let n = periodic_guided_restart(&mut state, &mut sphere(3), &cfg, &bounds, 50, &mut rng)
            .unwrap();
        // sizes 7,7,6,6,6,6,6,6 -> 4+4+3*6
        assert_eq!(n, 26);
        assert!(state.particles().all(|p| bounds.contains(&p.position)));
    }

    #[test]
    fn lowdim_prepare_tightens_and_assigns() {
        let bounds = Bounds::uniform(2, -5.0, 5.0).unwrap();
        let mut rng = stream_from_seed(1);
        let mut state = initialize_population(&bounds, 16, 8, 10, &mut rng).unwrap();
        let mut m = Mawdo::new(StrategyConfig::mawdo()).unwrap();
        m.prepare(&mut state, &bounds, &mut rng);
        assert_eq!(state.vmax, vec![0.25 * 0.2 * 10.0; 2]);
        let first = state.groups[0].coeffs;
        assert!(state.groups[1..].iter().all(|g| g.coeffs != first));
        assert!(state
            .particles()
            .all(|p| p.velocity.iter().all(|u| u.abs() <= 0.5)));
    }

    #[test]
    fn positions_stay_in_bounds_and_trace_monotone() {
        let bounds = Bounds::uniform(4, 0.0, 10.0).unwrap();
        let mut f = FnObjective::new(4, |x: &[f64]| x.iter().map(|v| (v - 9.9).powi(2)).sum());
        let mut rng = stream_from_seed(21);
        let state = initialize_population(&bounds, 40, 8, 120, &mut rng).unwrap();
        let mut m = Mawdo::new(StrategyConfig::mawdo()).unwrap();
        let r = run_state(&mut m, &mut f, &bounds, state, &mut rng, 21).unwrap();
        assert!(r.trace.windows(2).all(|w| w[1] <= w[0]));
        assert!(bounds.contains(&r.final_best_position));
    }
}
