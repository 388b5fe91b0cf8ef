use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::algorithms::AlgorithmId;
use crate::benchmarks::FunctionId;
use crate::error::{Error, Result};
use crate::pathplan::{PlannerConfig, ScenarioState};
use crate::wdo::{StrategyConfig, Variant};

/// Environment variable consulted for the output directory when neither the
/// command line nor the config file names one.
pub const OUT_ENV: &str = "WINDPLAN_OUT";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Bench,
    Ablation,
    Plan,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Command::Bench => "bench",
            Command::Ablation => "ablation",
            Command::Plan => "plan",
        })
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bench" => Ok(Command::Bench),
            "ablation" => Ok(Command::Ablation),
            "plan" => Ok(Command::Plan),
            _ => Err(Error::UnknownId {
                kind: "command",
                name: s.to_string(),
                valid: "bench, ablation, plan".into(),
            }),
        }
    }
}

/// Experiment description as written in a JSON config file. Every field is
/// optional; missing ones take the defaults of the command.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub command: Option<Command>,
    pub algorithms: Option<Vec<String>>,
    pub functions: Option<Vec<String>>,
    pub scenario_path: Option<PathBuf>,
    pub population: Option<usize>,
    pub iterations: Option<usize>,
    pub runs: Option<usize>,
    pub seed: Option<u64>,
    pub output_dir: Option<PathBuf>,
    /// Settings for `mawdo`; the `mawdo-1` to `mawdo-4` presets ignore them.
    pub strategy: Option<StrategyConfig>,
    pub jobs: Option<usize>,
    /// Receding-horizon settings for `plan`.
    pub planner: Option<PlannerConfig>,
}

/// Values given on the command line. They win over the config file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub runs: Option<usize>,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn from_json(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    /// Fills in defaults for `command` and checks every field. `env_out` is
    /// the value of [`OUT_ENV`], if set.
    pub fn resolve(
        &self,
        command: Command,
        overrides: &Overrides,
        env_out: Option<PathBuf>,
    ) -> Result<Experiment> {
        if let Some(c) = self.command {
            if c != command {
                return Err(Error::InvalidConfig(format!(
                    "config is for `{c}` but `{command}` was requested"
                )));
            }
        }
        let seed = overrides.seed.or(self.seed).ok_or_else(|| {
            Error::InvalidConfig("a seed is required (--seed or \"seed\" in the config)".into())
        })?;
        let (default_runs, default_pop, default_iter) = match command {
            Command::Bench | Command::Ablation => (30, 50, 500),
            Command::Plan => {
                let p = self.planner.clone().unwrap_or_default();
                (50, p.population, p.iterations)
            }
        };
        let runs = overrides.runs.or(self.runs).unwrap_or(default_runs);
        if runs == 0 {
            return Err(Error::InvalidConfig("runs must be >= 1".into()));
        }
        let jobs = overrides.jobs.or(self.jobs).unwrap_or(1);
        if jobs == 0 {
            return Err(Error::InvalidConfig("jobs must be >= 1".into()));
        }
        let population = self.population.unwrap_or(default_pop);
        let iterations = self.iterations.unwrap_or(default_iter);
        if population == 0 || iterations == 0 {
            return Err(Error::InvalidConfig(
                "population and iterations must be >= 1".into(),
            ));
        }
        let output_dir = overrides
            .out
            .clone()
            .or_else(|| self.output_dir.clone())
            .or(env_out)
            .unwrap_or_else(|| PathBuf::from("out"));

        let algorithms = match (&self.algorithms, command) {
            (Some(names), _) => names
                .iter()
                .map(|n| n.parse())
                .collect::<Result<Vec<AlgorithmId>>>()?,
            (None, Command::Ablation) => Variant::ALL.into_iter().map(AlgorithmId::from).collect(),
            (None, _) => AlgorithmId::COMPARISON.to_vec(),
        };
        if algorithms.is_empty() {
            return Err(Error::InvalidConfig("no algorithms selected".into()));
        }
        let functions = match &self.functions {
            Some(ids) => ids
                .iter()
                .map(|s| s.parse())
                .collect::<Result<Vec<FunctionId>>>()?,
            None => FunctionId::all().collect(),
        };
        if command != Command::Plan && functions.is_empty() {
            return Err(Error::InvalidConfig("no functions selected".into()));
        }
        let strategy = self.strategy.clone().unwrap_or_default();
        strategy.validate()?;

        let mut planner = self.planner.clone().unwrap_or_default();
        planner.population = population;
        planner.iterations = iterations;
        let scenario = match command {
            Command::Plan => {
                planner.validate()?;
                Some(match &self.scenario_path {
                    Some(path) => ScenarioState::load(path)?,
                    None => ScenarioState::default_scenario(),
                })
            }
            _ => None,
        };

        Ok(Experiment {
            command,
            algorithms,
            functions,
            scenario,
            population,
            iterations,
            runs,
            seed,
            output_dir,
            strategy,
            jobs,
            planner,
        })
    }
}

/// A fully resolved and validated experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct Experiment {
    pub command: Command,
    pub algorithms: Vec<AlgorithmId>,
    pub functions: Vec<FunctionId>,
    pub scenario: Option<ScenarioState>,
    pub population: usize,
    pub iterations: usize,
    pub runs: usize,
    pub seed: u64,
    pub output_dir: PathBuf,
    pub strategy: StrategyConfig,
    pub jobs: usize,
    pub planner: PlannerConfig,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seeded() -> Overrides {
        Overrides {
            seed: Some(1),
            ..Overrides::default()
        }
    }

    #[test]
    fn bench_defaults() {
        let e = ExperimentConfig::default()
            .resolve(Command::Bench, &seeded(), None)
            .unwrap();
        assert_eq!(
            (e.population, e.iterations, e.runs, e.jobs),
            (50, 500, 30, 1)
        );
        assert_eq!(e.functions.len(), 16);
        assert_eq!(e.algorithms, AlgorithmId::COMPARISON.to_vec());
        assert_eq!(e.output_dir, PathBuf::from("out"));
        assert!(e.scenario.is_none());
    }

    #[test]
    fn ablation_and_plan_defaults() {
        let e = ExperimentConfig::default()
            .resolve(Command::Ablation, &seeded(), None)
            .unwrap();
        assert_eq!(e.algorithms.len(), 5);
        assert_eq!(e.algorithms[4], AlgorithmId::Mawdo);
        let e = ExperimentConfig::default()
            .resolve(Command::Plan, &seeded(), None)
            .unwrap();
        assert_eq!((e.population, e.iterations, e.runs), (1360, 100, 50));
        assert_eq!(e.scenario.unwrap().obstacles.len(), 8);
    }

    #[test]
    fn precedence_of_output_dir_and_seed() {
        let cfg = ExperimentConfig {
            seed: Some(7),
            output_dir: Some("from_file".into()),
            ..ExperimentConfig::default()
        };
        let env = Some(PathBuf::from("from_env"));
        let e = cfg
            .resolve(Command::Bench, &Overrides::default(), env.clone())
            .unwrap();
        assert_eq!(
            (e.seed, e.output_dir.clone()),
            (7, PathBuf::from("from_file"))
        );
        let cli = Overrides {
            seed: Some(9),
            out: Some("from_cli".into()),
            ..Overrides::default()
        };
        let e = cfg.resolve(Command::Bench, &cli, env.clone()).unwrap();
        assert_eq!((e.seed, e.output_dir), (9, PathBuf::from("from_cli")));
        let bare = ExperimentConfig::default();
        let e = bare.resolve(Command::Bench, &seeded(), env).unwrap();
        assert_eq!(e.output_dir, PathBuf::from("from_env"));
    }

    #[test]
    fn rejects_bad_configs() {
        let none = ExperimentConfig::default();
        assert!(none
            .resolve(Command::Bench, &Overrides::default(), None)
            .is_err());
        let zero = Overrides {
            runs: Some(0),
            ..seeded()
        };
        assert!(none.resolve(Command::Bench, &zero, None).is_err());
        let foo = ExperimentConfig {
            algorithms: Some(vec!["foo".into()]),
            ..ExperimentConfig::default()
        };
        let msg = foo
            .resolve(Command::Bench, &seeded(), None)
            .unwrap_err()
            .to_string();
        assert!(msg.contains("foo") && msg.contains("mawdo"), "{msg}");
        let f99 = ExperimentConfig {
            functions: Some(vec!["F99".into()]),
            ..ExperimentConfig::default()
        };
        assert!(f99.resolve(Command::Bench, &seeded(), None).is_err());
        let wrong = ExperimentConfig {
            command: Some(Command::Plan),
            ..ExperimentConfig::default()
        };
        assert!(wrong.resolve(Command::Bench, &seeded(), None).is_err());
        let missing = ExperimentConfig {
            scenario_path: Some("/nonexistent/scenario.json".into()),
            ..ExperimentConfig::default()
        };
        assert!(missing.resolve(Command::Plan, &seeded(), None).is_err());
        assert!(ExperimentConfig::from_json("{\"sede\": 1}").is_err());
    }

    #[test]
    fn parses_json_with_partial_strategy() {
        let cfg = ExperimentConfig::from_json(
            r#"{"command": "bench", "algorithms": ["mawdo"], "functions": ["F1"],
                "runs": 3, "seed": 42, "strategy": {"use_pgr": false}}"#,
        )
        .unwrap();
        let e = cfg
            .resolve(Command::Bench, &Overrides::default(), None)
            .unwrap();
        assert!(!e.strategy.use_pgr);
        assert!(e.strategy.use_obl);
        assert_eq!(e.functions, vec![FunctionId::new(1).unwrap()]);
    }
}
