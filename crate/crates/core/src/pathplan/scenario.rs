use std::path::Path;

use serde::{Deserialize, Serialize};

use super::geometry::{Point, Shape};
use crate::error::{Error, Result};

const DEFAULT_SCENARIO: &str = include_str!("../../scenarios/default.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapSpec {
    pub width: f64,
    pub height: f64,
    pub start: Point,
    pub goal: Point,
}

impl MapSpec {
    pub fn contains(&self, p: Point) -> bool {
        (0.0..=self.width).contains(&p.x) && (0.0..=self.height).contains(&p.y)
    }

    pub fn clamp(&self, p: Point) -> Point {
        Point::new(p.x.clamp(0.0, self.width), p.y.clamp(0.0, self.height))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Obstacle {
    pub shape: Shape,
    /// Pixels per timestep.
    #[serde(default)]
    pub velocity: Point,
    pub is_dynamic: bool,
}

/// Weights of the path cost `alpha*length + beta*k*n^4 + lambda*turning`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CostWeights {
    pub alpha: f64,
    pub beta: f64,
    pub lambda: f64,
    pub k: f64,
}

impl Default for CostWeights {
    fn default() -> Self {
        Self {
            alpha: 0.5,
            beta: 0.4,
            lambda: 0.1,
            k: 100.0,
        }
    }
}

impl CostWeights {
    pub const SUM_TOLERANCE: f64 = 1e-12;

    pub fn validate(&self) -> Result<()> {
        let w = [self.alpha, self.beta, self.lambda];
        if w.iter().any(|v| !(*v >= 0.0)) {
            return Err(Error::InvalidScenario(format!(
                "negative cost weight in {self:?}"
            )));
        }
        if (w.iter().sum::<f64>() - 1.0).abs() > Self::SUM_TOLERANCE {
            return Err(Error::InvalidScenario(format!(
                "cost weights must sum to 1, got {}",
                w.iter().sum::<f64>()
            )));
        }
        if !(self.k > 0.0 && self.k.is_finite()) {
            return Err(Error::InvalidScenario(format!(
                "collision scale k = {} must be > 0",
                self.k
            )));
        }
        Ok(())
    }
}

/// On-disk scenario layout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub map: MapSpec,
    pub obstacles: Vec<Obstacle>,
    #[serde(default)]
    pub weights: CostWeights,
}

/// A world at one timestep, with the robot's current position.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioState {
    pub map: MapSpec,
    pub obstacles: Vec<Obstacle>,
    pub timestep: usize,
    pub robot_position: Point,
    pub weights: CostWeights,
}

impl ScenarioState {
    pub fn new(file: ScenarioFile) -> Result<Self> {
        let state = Self {
            robot_position: file.map.start,
            map: file.map,
            obstacles: file.obstacles,
            timestep: 0,
            weights: file.weights,
        };
        state.validate()?;
        for (i, o) in state.obstacles.iter().enumerate() {
            for (name, p) in [("start", state.map.start), ("goal", state.map.goal)] {
                if o.shape.contains(p, 0.0) {
                    return Err(Error::InvalidScenario(format!(
                        "{name} lies inside obstacle {i}"
                    )));
                }
            }
        }
        Ok(state)
    }

    pub fn from_json(json: &str) -> Result<Self> {
        Self::new(serde_json::from_str(json)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    /// The shipped 366 x 366 scenario: six moving circles and two static
    /// rectangles between (10, 10) and (356, 356).
    pub fn default_scenario() -> Self {
        Self::from_json(DEFAULT_SCENARIO).expect("bundled scenario is valid")
    }

    pub fn to_file(&self) -> ScenarioFile {
        ScenarioFile {
            map: self.map.clone(),
            obstacles: self.obstacles.clone(),
            weights: self.weights,
        }
    }

    /// Structural checks: map size, points inside the map, weights and
    /// obstacle shapes and motion. Placement of start and goal relative to
    /// obstacles is only checked by [`ScenarioState::new`].
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidScenario(msg));
        let m = &self.map;
        if !(m.width > 0.0 && m.height > 0.0 && m.width.is_finite() && m.height.is_finite()) {
            return fail(format!(
                "map size {} x {} must be positive",
                m.width, m.height
            ));
        }
        for (name, p) in [
            ("start", m.start),
            ("goal", m.goal),
            ("robot", self.robot_position),
        ] {
            if !m.contains(p) {
                return fail(format!("{name} ({}, {}) outside the map", p.x, p.y));
            }
        }
        self.weights.validate()?;
        for (i, o) in self.obstacles.iter().enumerate() {
            match &o.shape {
                Shape::Circle { radius, .. } if !(*radius > 0.0) => {
                    return fail(format!("obstacle {i}: radius must be > 0"));
                }
                Shape::Polygon { vertices } if vertices.len() < 3 => {
                    return fail(format!("obstacle {i}: polygon needs >= 3 vertices"));
                }
                _ => {}
            }
            let moving = o.velocity.x != 0.0 || o.velocity.y != 0.0;
            if o.is_dynamic && !moving {
                return fail(format!("obstacle {i}: dynamic obstacle with zero velocity"));
            }
            if !o.is_dynamic && moving {
                return fail(format!(
                    "obstacle {i}: static obstacle with nonzero velocity"
                ));
            }
        }
        Ok(())
    }

    /// Obstacles after `steps` further timesteps.
    pub fn obstacles_after(&self, steps: usize) -> Vec<Obstacle> {
        let mut s = self.clone();
        for _ in 0..steps {
            advance_obstacles(&mut s);
        }
        s.obstacles
    }
}

/// Moves every dynamic obstacle by its velocity. A velocity component
/// flips when the obstacle touches the matching map border while heading
/// outward.
pub fn advance_obstacles(state: &mut ScenarioState) {
    let (w, h) = (state.map.width, state.map.height);
    for o in state.obstacles.iter_mut().filter(|o| o.is_dynamic) {
        o.shape.translate(o.velocity.x, o.velocity.y);
        let (x0, y0, x1, y1) = o.shape.bounding_box();
        if (x0 <= 0.0 && o.velocity.x < 0.0) || (x1 >= w && o.velocity.x > 0.0) {
            o.velocity.x = -o.velocity.x;
        }
        if (y0 <= 0.0 && o.velocity.y < 0.0) || (y1 >= h && o.velocity.y > 0.0) {
            o.velocity.y = -o.velocity.y;
        }
    }
    state.timestep += 1;
}
