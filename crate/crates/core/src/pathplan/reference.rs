use pathfinding::prelude::astar;

use super::geometry::Point;
use super::scenario::{MapSpec, Obstacle};
use crate::error::{Error, Result};

const STRAIGHT: u64 = 1_000_000;
const DIAGONAL: u64 = 1_414_214;

/// Occupancy of the integer lattice `0..=width x 0..=height`.
struct Grid {
    w: i32,
    h: i32,
    blocked: Vec<bool>,
}

impl Grid {
    fn new(map: &MapSpec, obstacles: &[Obstacle]) -> Self {
        let (w, h) = (map.width.floor() as i32, map.height.floor() as i32);
        let mut blocked = vec![false; ((w + 1) * (h + 1)) as usize];
        for o in obstacles {
            let (x0, y0, x1, y1) = o.shape.bounding_box();
            let xs = (x0.floor().max(0.0) as i32)..=(x1.ceil().min(w as f64) as i32);
            for x in xs {
                let ys = (y0.floor().max(0.0) as i32)..=(y1.ceil().min(h as f64) as i32);
                for y in ys {
                    if o.shape.contains(Point::new(x as f64, y as f64), 0.0) {
                        blocked[(y * (w + 1) + x) as usize] = true;
                    }
                }
            }
        }
        Self { w, h, blocked }
    }

    fn free(&self, (x, y): (i32, i32)) -> bool {
        x >= 0
            && y >= 0
            && x <= self.w
            && y <= self.h
            && !self.blocked[(y * (self.w + 1) + x) as usize]
    }
}

fn octile((ax, ay): (i32, i32), (bx, by): (i32, i32)) -> u64 {
    let dx = (ax - bx).unsigned_abs() as u64;
    let dy = (ay - by).unsigned_abs() as u64;
    let (lo, hi) = (dx.min(dy), dx.max(dy));
    lo * DIAGONAL + (hi - lo) * STRAIGHT
}

/// Shortest 8-connected path length on the 1-pixel lattice from `start` to
/// `goal` (both rounded to the nearest node), avoiding lattice nodes inside
/// `obstacles`.
pub fn grid_reference_length(
    map: &MapSpec,
    obstacles: &[Obstacle],
    start: Point,
    goal: Point,
) -> Result<f64> {
    let grid = Grid::new(map, obstacles);
    let node = |p: Point| (p.x.round() as i32, p.y.round() as i32);
    let (s, g) = (node(start), node(goal));
    for (name, n) in [("start", s), ("goal", g)] {
        if !grid.free(n) {
            return Err(Error::InvalidScenario(format!(
                "{name} node {n:?} is blocked"
            )));
        }
    }
    let successors = |&(x, y): &(i32, i32)| {
        let mut next = Vec::with_capacity(8);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if (dx, dy) != (0, 0) && grid.free((x + dx, y + dy)) {
                    let cost = if dx != 0 && dy != 0 {
                        DIAGONAL
                    } else {
                        STRAIGHT
                    };
                    next.push(((x + dx, y + dy), cost));
                }
            }
        }
        next
    };
    let (_, cost) = astar(&s, successors, |n| octile(*n, g), |n| *n == g)
        .ok_or_else(|| Error::InvalidScenario("goal unreachable on the reference grid".into()))?;
    Ok(cost as f64 / STRAIGHT as f64)
}
