//! Wind driven swarm optimization with a benchmark harness and a
//! dynamic-obstacle path planner.
//!
//! * [`swarm`]: population framework and seeded run loop
//! * [`wdo`]: WDO, AWDO and MAWDO with switchable enhancements
//! * [`baselines`]: grey wolf and whale optimizers for comparison
//! * [`benchmarks`]: the sixteen test functions F1 to F16
//! * [`stats`]: run summaries and the Wilcoxon rank-sum test
//! * [`pathplan`]: waypoint paths, collision-aware cost, receding-horizon
//!   simulation among moving obstacles
//! * [`experiment`]: config-driven experiments writing CSV and SVG output

pub mod baselines;
pub mod benchmarks;
pub mod error;
pub mod experiment;
pub mod pathplan;
pub mod rng;
pub mod stats;
pub mod swarm;
pub mod wdo;

pub use error::{Error, Result};
