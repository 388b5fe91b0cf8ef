//! Dynamic-obstacle path planning on a pixel map.
//!
//! A plan is a vector of interior waypoints between the robot and the goal,
//! scored by length, a quartic collision penalty and total turning. The
//! simulation replans every timestep while obstacles move.

pub mod cost;
pub mod geometry;
pub mod reference;
pub mod render;
pub mod scenario;
pub mod simulate;

pub use cost::{
    count_collisions, decode, obstacle_cost, path_length, total_cost, turning_cost,
    waypoint_bounds, CostTerms, PathCandidate, PlanObjective,
};
pub use geometry::{Point, Shape};
pub use reference::grid_reference_length;
pub use render::snapshot_svg;
pub use scenario::{
    advance_obstacles, CostWeights, MapSpec, Obstacle, ScenarioFile, ScenarioState,
};
pub use simulate::{
    metrics, simulate_replan, PathMetrics, PlannerConfig, Simulation, TrajectoryPoint,
};
