use std::fmt;
use std::str::FromStr;

use crate::baselines::{Gwo, Woa};
use crate::error::{Error, Result};
use crate::swarm::Optimizer;
use crate::wdo::{Awdo, Mawdo, StrategyConfig, Variant, Wdo};

/// Optimizers selectable by name in an experiment config.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgorithmId {
    Gwo,
    Woa,
    Wdo,
    Awdo,
    /// MAWDO with the experiment's strategy settings.
    Mawdo,
    /// One of the single-enhancement ablation presets.
    Preset(Variant),
}

impl AlgorithmId {
    /// Algorithms compared by default in `bench` and `plan`.
    pub const COMPARISON: [AlgorithmId; 5] = [
        AlgorithmId::Gwo,
        AlgorithmId::Woa,
        AlgorithmId::Wdo,
        AlgorithmId::Awdo,
        AlgorithmId::Mawdo,
    ];

    pub fn all() -> Vec<AlgorithmId> {
        let mut v = Self::COMPARISON.to_vec();
        v.extend(
            [
                Variant::Mawdo1,
                Variant::Mawdo2,
                Variant::Mawdo3,
                Variant::Mawdo4,
            ]
            .map(AlgorithmId::Preset),
        );
        v
    }

    /// Config name, e.g. `mawdo-2`.
    pub fn name(self) -> String {
        self.label().to_ascii_lowercase()
    }

    /// Column label, e.g. `MAWDO-2`.
    pub fn label(self) -> &'static str {
        match self {
            AlgorithmId::Gwo => "GWO",
            AlgorithmId::Woa => "WOA",
            AlgorithmId::Wdo => "WDO",
            AlgorithmId::Awdo => "AWDO",
            AlgorithmId::Mawdo => "MAWDO",
            AlgorithmId::Preset(v) => v.label(),
        }
    }

    /// A fresh optimizer. `strategy` only applies to [`AlgorithmId::Mawdo`].
    pub fn build(self, strategy: &StrategyConfig) -> Result<Box<dyn Optimizer + Send>> {
        Ok(match self {
            AlgorithmId::Gwo => Box::new(Gwo::default()),
            AlgorithmId::Woa => Box::new(Woa),
            AlgorithmId::Wdo => Box::new(Wdo::default()),
            AlgorithmId::Awdo => Box::new(Awdo),
            AlgorithmId::Mawdo => Box::new(Mawdo::new(strategy.clone())?),
            AlgorithmId::Preset(v) => Box::new(Mawdo::variant(v)),
        })
    }
}

impl From<Variant> for AlgorithmId {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Full => AlgorithmId::Mawdo,
            other => AlgorithmId::Preset(other),
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for AlgorithmId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::all()
            .into_iter()
            .find(|a| a.label().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownId {
                kind: "algorithm",
                name: s.to_string(),
                valid: Self::all()
                    .into_iter()
                    .map(AlgorithmId::name)
                    .collect::<Vec<_>>()
                    .join(", "),
            })
    }
}
