use serde::{Deserialize, Serialize};

use super::cost::{count_collisions, path_length, turning_cost, PlanObjective, DEFAULT_WAYPOINTS};
use super::geometry::Point;
use super::scenario::{advance_obstacles, ScenarioState};
use crate::error::{Error, Result};
use crate::rng::stream_from_seed;
use crate::swarm::{initialize_population, run_state, Optimizer};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PlannerConfig {
    pub population: usize,
    /// Optimizer iterations per replan.
    pub iterations: usize,
    pub waypoints: usize,
    /// Distance the robot travels along each plan before replanning.
    pub step_distance: f64,
    pub goal_tolerance: f64,
    pub horizon_steps: usize,
    /// Extra clearance around obstacles while planning.
    pub clearance: f64,
    /// Seed one particle per group of every replan with the part of the
    /// previous plan not yet driven.
    pub warm_start: bool,
}

impl Default for PlannerConfig {
    fn default() -> Self {
        Self {
            population: 1360,
            iterations: 100,
            waypoints: DEFAULT_WAYPOINTS,
            step_distance: 25.0,
            goal_tolerance: 5.0,
            horizon_steps: 200,
            clearance: 4.0,
            warm_start: true,
        }
    }
}

impl PlannerConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(Error::InvalidConfig(m));
        if self.population == 0 || self.iterations == 0 || self.waypoints == 0 {
            return fail("population, iterations and waypoints must be >= 1".into());
        }
        if !(self.step_distance > 0.0) || !(self.goal_tolerance >= 0.0) || !(self.clearance >= 0.0)
        {
            return fail("step_distance must be > 0, goal_tolerance and clearance >= 0".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryPoint {
    pub timestep: usize,
    pub x: f64,
    pub y: f64,
}

impl TrajectoryPoint {
    pub fn point(&self) -> Point {
        Point::new(self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PathMetrics {
    pub length: f64,
    pub optimality_gap: f64,
    pub smoothness: f64,
    pub collisions: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Simulation {
    /// Executed path: the start, then every vertex passed, tagged with the
    /// timestep at which it was reached.
    pub trajectory: Vec<TrajectoryPoint>,
    pub reached: bool,
    pub collisions: usize,
    /// Timesteps elapsed.
    pub steps: usize,
    pub replans: usize,
    /// Best plan cost per iteration of the first replan.
    pub first_trace: Vec<f64>,
    /// Final plan cost of every replan.
    pub plan_costs: Vec<f64>,
}

impl Simulation {
    pub fn points(&self) -> Vec<Point> {
        self.trajectory.iter().map(TrajectoryPoint::point).collect()
    }

    pub fn metrics(&self, reference_length: f64) -> PathMetrics {
        metrics(&self.points(), reference_length, self.collisions)
    }
}

/// Length, length relative to `reference_length`, and turning cost of an
/// executed path.
pub fn metrics(trajectory: &[Point], reference_length: f64, collisions: usize) -> PathMetrics {
    let length = path_length(trajectory);
    PathMetrics {
        length,
        optimality_gap: if reference_length > 0.0 {
            length / reference_length
        } else {
            1.0
        },
        smoothness: turning_cost(trajectory),
        collisions,
    }
}

/// Points reached when travelling `distance` along `path` from its first
/// point: every vertex passed and the stopping point.
pub fn advance_along(path: &[Point], distance: f64) -> Vec<Point> {
    travel(path, distance).0
}

/// [`advance_along`] plus the index of the first vertex of `path` not yet
/// reached (`path.len()` once the end is reached).
fn travel(path: &[Point], distance: f64) -> (Vec<Point>, usize) {
    let mut out = Vec::new();
    let mut left = distance;
    for (i, w) in path.windows(2).enumerate() {
        let seg = w[0].distance(w[1]);
        if seg == 0.0 {
            continue;
        }
        if seg >= left {
            if seg == left {
                out.push(w[1]);
                return (out, i + 2);
            }
            out.push(w[0].lerp(w[1], left / seg));
            return (out, i + 1);
        }
        left -= seg;
        out.push(w[1]);
    }
    (out, path.len())
}

/// Encoding of the path `robot -> rest -> goal` with `waypoints` interior
/// points: `rest` padded at the front with copies of `robot`, which add
/// neither length nor turning.
fn warm_vector(robot: Point, rest: &[Point], waypoints: usize) -> Vec<f64> {
    let rest = &rest[rest.len().saturating_sub(waypoints)..];
    std::iter::repeat_n(robot, waypoints - rest.len())
        .chain(rest.iter().copied())
        .flat_map(|p| [p.x, p.y])
        .collect()
}

/// Receding-horizon run: at each timestep plan from the robot to the goal
/// against the current obstacles, move `step_distance` along the plan and
/// advance the obstacles. With `warm_start` the swarm of each replan
/// contains the rest of the previous plan, so the new plan is never worse
/// than continuing the old one. A move that would touch an obstacle is skipped
/// (the robot waits), unless the robot is already inside one.
pub fn simulate_replan(
    scenario: &ScenarioState,
    optimizer: &mut dyn Optimizer,
    cfg: &PlannerConfig,
    seed: u64,
) -> Result<Simulation> {
    cfg.validate()?;
    scenario.validate()?;
    let mut rng = stream_from_seed(seed);
    let mut state = scenario.clone();
    let goal = state.map.goal;
    let mut sim = Simulation {
        trajectory: Vec::new(),
        reached: false,
        collisions: 0,
        steps: 0,
        replans: 0,
        first_trace: Vec::new(),
        plan_costs: Vec::new(),
    };
    if state.robot_position.distance(goal) <= cfg.goal_tolerance {
        sim.reached = true;
        return Ok(sim);
    }
    sim.trajectory.push(TrajectoryPoint {
        timestep: state.timestep,
        x: state.robot_position.x,
        y: state.robot_position.y,
    });
    let mut carried: Option<Vec<Point>> = None;
    while sim.steps < cfg.horizon_steps {
        let mut objective = PlanObjective::new(
            &state.map,
            &state.obstacles,
            state.weights,
            state.robot_position,
            cfg.waypoints,
            cfg.clearance,
        );
        let bounds = objective.bounds();
        let mut swarm = initialize_population(
            &bounds,
            cfg.population,
            optimizer.group_count(),
            cfg.iterations,
            &mut rng,
        )?;
        if let Some(rest) = carried.as_deref() {
            let warm = warm_vector(state.robot_position, rest, cfg.waypoints);
            for group in &mut swarm.groups {
                let seeded = &mut group.members[0];
                seeded.position.clone_from(&warm);
                seeded.pbest_position.clone_from(&warm);
            }
        }
        let record = run_state(optimizer, &mut objective, &bounds, swarm, &mut rng, seed)?;
        let plan = super::cost::decode(
            &record.final_best_position,
            state.robot_position,
            goal,
            &state.map,
        )?;
        if sim.replans == 0 {
            sim.first_trace = record.trace;
        }
        sim.replans += 1;
        sim.plan_costs.push(record.final_best_fitness);

        let (reached, next) = travel(&plan.points, cfg.step_distance);
        let mut executed = Vec::with_capacity(reached.len() + 1);
        executed.push(state.robot_position);
        executed.extend(&reached);
        let hits = count_collisions(&executed, &state.obstacles, 0.0);
        let trapped = state
            .obstacles
            .iter()
            .any(|o| o.shape.contains(state.robot_position, 0.0));
        let moving = hits == 0 || trapped;
        if moving {
            sim.collisions += hits;
        }
        advance_obstacles(&mut state);
        sim.steps += 1;
        if cfg.warm_start {
            // interior waypoints still ahead; all of them when waiting
            let from = if moving { next.max(1) } else { 1 };
            let last = plan.points.len() - 1;
            carried = Some(plan.points[from.min(last)..last].to_vec());
        }
        if moving {
            for p in reached {
                sim.trajectory.push(TrajectoryPoint {
                    timestep: state.timestep,
                    x: p.x,
                    y: p.y,
                });
                state.robot_position = p;
            }
        }
        if state.robot_position.distance(goal) <= cfg.goal_tolerance {
            sim.reached = true;
            break;
        }
    }
    Ok(sim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathplan::geometry::Shape;
    use crate::pathplan::scenario::{CostWeights, MapSpec, Obstacle, ScenarioFile};
    use crate::wdo::Mawdo;
    use approx::assert_abs_diff_eq;

    fn empty(start: Point, goal: Point) -> ScenarioState {
        ScenarioState::new(ScenarioFile {
            map: MapSpec {
                width: 200.0,
                height: 200.0,
                start,
                goal,
            },
            obstacles: vec![],
            weights: CostWeights::default(),
        })
        .unwrap()
    }

    fn small() -> PlannerConfig {
        PlannerConfig {
            population: 160,
            iterations: 60,
            waypoints: 4,
            horizon_steps: 40,
            ..PlannerConfig::default()
        }
    }

    #[test]
    fn advance_along_polyline() {
        let path = [
            Point::new(0.0, 0.0),
            Point::new(10.0, 0.0),
            Point::new(10.0, 30.0),
        ];
        assert_eq!(advance_along(&path, 5.0), vec![Point::new(5.0, 0.0)]);
        assert_eq!(advance_along(&path, 10.0), vec![Point::new(10.0, 0.0)]);
        assert_eq!(
            advance_along(&path, 25.0),
            vec![Point::new(10.0, 0.0), Point::new(10.0, 15.0)]
        );
        assert_eq!(
            advance_along(&path, 100.0),
            vec![Point::new(10.0, 0.0), Point::new(10.0, 30.0)]
        );
        assert_eq!(travel(&path, 5.0).1, 1);
        assert_eq!(travel(&path, 10.0).1, 2);
        assert_eq!(travel(&path, 25.0).1, 2);
        assert_eq!(travel(&path, 100.0).1, 3);
    }

    #[test]
    fn warm_vector_pads_with_robot() {
        let robot = Point::new(1.0, 2.0);
        let rest = [Point::new(5.0, 5.0), Point::new(6.0, 7.0)];
        assert_eq!(
            warm_vector(robot, &rest, 3),
            vec![1.0, 2.0, 5.0, 5.0, 6.0, 7.0]
        );
        assert_eq!(warm_vector(robot, &rest, 1), vec![6.0, 7.0]);
        assert_eq!(warm_vector(robot, &[], 2), vec![1.0, 2.0, 1.0, 2.0]);
    }

    #[test]
    fn metrics_examples() {
        let line = [Point::new(0.0, 0.0), Point::new(30.0, 40.0)];
        let m = metrics(&line, 50.0, 0);
        assert_eq!((m.length, m.optimality_gap, m.smoothness), (50.0, 1.0, 0.0));
        let m = metrics(&line, 0.0, 0);
        assert_eq!(m.optimality_gap, 1.0);
    }

    #[test]
    fn goal_at_start_is_empty() {
        let p = Point::new(50.0, 50.0);
        let sim = simulate_replan(&empty(p, p), &mut Mawdo::default(), &small(), 1).unwrap();
        assert!(sim.reached);
        assert!(sim.trajectory.is_empty());
        assert_eq!(sim.metrics(1.0).length, 0.0);
    }

    #[test]
    fn open_corridor_is_nearly_straight() {
        let s = empty(Point::new(10.0, 100.0), Point::new(190.0, 100.0));
        let sim = simulate_replan(&s, &mut Mawdo::default(), &small(), 3).unwrap();
        assert!(sim.reached);
        assert_eq!(sim.collisions, 0);
        let len = sim.metrics(180.0).length;
        assert!(len <= 180.0 * 1.01, "{len}");
        assert_abs_diff_eq!(sim.trajectory.last().unwrap().x, 190.0, epsilon = 5.0);
    }

    #[test]
    fn covered_goal_is_unreached() {
        let mut s = empty(Point::new(10.0, 10.0), Point::new(150.0, 150.0));
        s.obstacles.push(Obstacle {
            shape: Shape::rectangle(130.0, 130.0, 170.0, 170.0),
            velocity: Point::default(),
            is_dynamic: false,
        });
        let cfg = PlannerConfig {
            horizon_steps: 15,
            ..small()
        };
        let sim = simulate_replan(&s, &mut Mawdo::default(), &cfg, 5).unwrap();
        assert!(!sim.reached);
        assert_eq!(sim.steps, 15);
    }
}
