use std::f64::consts::PI;

use super::geometry::Point;
use super::scenario::{CostWeights, MapSpec, Obstacle};
use crate::error::{Error, Result};
use crate::swarm::{Bounds, EvalError, Objective};

/// Interior waypoints per plan.
pub const DEFAULT_WAYPOINTS: usize = 20;

/// A decoded plan: start, interior waypoints in encoded order, goal.
#[derive(Debug, Clone, PartialEq)]
pub struct PathCandidate {
    pub points: Vec<Point>,
}

/// Pairs `[x1, y1, x2, y2, ...]` into map-clamped waypoints between `start`
/// and `goal`.
pub fn decode(vector: &[f64], start: Point, goal: Point, map: &MapSpec) -> Result<PathCandidate> {
    if vector.len() % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "waypoint vector length {} is odd",
            vector.len()
        )));
    }
    let mut points = Vec::with_capacity(vector.len() / 2 + 2);
    decode_into(vector, start, goal, map, &mut points);
    Ok(PathCandidate { points })
}

fn decode_into(vector: &[f64], start: Point, goal: Point, map: &MapSpec, out: &mut Vec<Point>) {
    out.clear();
    out.push(start);
    out.extend(
        vector
            .chunks_exact(2)
            .map(|c| map.clamp(Point::new(c[0], c[1]))),
    );
    out.push(goal);
}

/// Search box for a `waypoints`-point encoding on `map`.
pub fn waypoint_bounds(map: &MapSpec, waypoints: usize) -> Bounds {
    let upper = (0..waypoints)
        .flat_map(|_| [map.width, map.height])
        .collect();
    Bounds::new(vec![0.0; 2 * waypoints], upper).expect("map size is positive")
}

pub fn path_length(points: &[Point]) -> f64 {
    points.windows(2).map(|w| w[0].distance(w[1])).sum()
}

/// Number of (segment, obstacle) pairs in contact, with obstacles grown by
/// `margin`.
pub fn count_collisions(points: &[Point], obstacles: &[Obstacle], margin: f64) -> usize {
    let boxes: Vec<_> = obstacles.iter().map(|o| o.shape.bounding_box()).collect();
    let mut n = 0;
    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (sx0, sx1) = (a.x.min(b.x) - margin, a.x.max(b.x) + margin);
        let (sy0, sy1) = (a.y.min(b.y) - margin, a.y.max(b.y) + margin);
        for (o, &(x0, y0, x1, y1)) in obstacles.iter().zip(&boxes) {
            if sx1 < x0 || sx0 > x1 || sy1 < y0 || sy0 > y1 {
                continue;
            }
            if o.shape.hits_segment(a, b, margin) {
                n += 1;
            }
        }
    }
    n
}

/// `k * n^4`.
pub fn obstacle_cost(collisions: usize, k: f64) -> f64 {
    k * (collisions as f64).powi(4)
}

/// Sum over interior vertices of `|theta - pi|`, where `theta` is the angle
/// between the incoming and outgoing segments (`pi` when going straight).
/// Repeated points are skipped.
pub fn turning_cost(points: &[Point]) -> f64 {
    let mut distinct: Vec<Point> = Vec::with_capacity(points.len());
    for &p in points {
        if distinct.last() != Some(&p) {
            distinct.push(p);
        }
    }
    distinct
        .windows(3)
        .map(|w| {
            let (ux, uy) = (w[0].x - w[1].x, w[0].y - w[1].y);
            let (vx, vy) = (w[2].x - w[1].x, w[2].y - w[1].y);
            // atan2 of cross and dot is the arccos of the normalized dot
            // product, without its loss of precision near straight lines
            let theta = (ux * vy - uy * vx).abs().atan2(ux * vx + uy * vy);
            PI - theta
        })
        .sum()
}

/// The three cost terms of a path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostTerms {
    pub length: f64,
    pub collisions: usize,
    pub turning: f64,
}

impl CostTerms {
    pub fn of(points: &[Point], obstacles: &[Obstacle], margin: f64) -> Self {
        Self {
            length: path_length(points),
            collisions: count_collisions(points, obstacles, margin),
            turning: turning_cost(points),
        }
    }

    pub fn total(&self, w: &CostWeights) -> f64 {
        w.alpha * self.length
            + w.beta * obstacle_cost(self.collisions, w.k)
            + w.lambda * self.turning
    }
}

pub fn total_cost(
    points: &[Point],
    obstacles: &[Obstacle],
    weights: &CostWeights,
    margin: f64,
) -> f64 {
    CostTerms::of(points, obstacles, margin).total(weights)
}

/// Cost of encoded plans from `start` to `goal` against a fixed obstacle
/// snapshot.
pub struct PlanObjective<'a> {
    pub map: &'a MapSpec,
    pub obstacles: &'a [Obstacle],
    pub weights: CostWeights,
    pub start: Point,
    pub goal: Point,
    pub waypoints: usize,
    /// Clearance added around every obstacle while planning.
    pub margin: f64,
    buffer: Vec<Point>,
}

impl<'a> PlanObjective<'a> {
    pub fn new(
        map: &'a MapSpec,
        obstacles: &'a [Obstacle],
        weights: CostWeights,
        start: Point,
        waypoints: usize,
        margin: f64,
    ) -> Self {
        Self {
            map,
            obstacles,
            weights,
            start,
            goal: map.goal,
            waypoints,
            margin,
            buffer: Vec::with_capacity(waypoints + 2),
        }
    }

    pub fn bounds(&self) -> Bounds {
        waypoint_bounds(self.map, self.waypoints)
    }
}

impl Objective for PlanObjective<'_> {
    fn dim(&self) -> usize {
        2 * self.waypoints
    }

    fn evaluate(&mut self, x: &[f64]) -> std::result::Result<f64, EvalError> {
        decode_into(x, self.start, self.goal, self.map, &mut self.buffer);
        Ok(total_cost(
            &self.buffer,
            self.obstacles,
            &self.weights,
            self.margin,
        ))
    }
}
