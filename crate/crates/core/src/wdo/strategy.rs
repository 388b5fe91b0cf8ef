use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Switches and hyperparameters for every MAWDO enhancement. The default is
/// the full algorithm; the ablation presets switch subsets on top of AWDO.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct StrategyConfig {
    pub use_hierarchical_guidance: bool,
    pub use_scheduled_mixing: bool,
    pub use_distance_gate: bool,
    pub use_pgr: bool,
    pub pgr_interval: usize,
    pub pgr_fraction: f64,
    pub sigma0_scale: f64,
    pub sigma_end_scale: f64,
    pub use_obl: bool,
    pub use_reflect_damp: bool,
    pub eta: f64,
    pub use_lowdim_stabilization: bool,
    pub lowdim_threshold: usize,
    pub vmax_scale_lowdim: f64,
    pub group_count: usize,
}

impl Default for StrategyConfig {
    fn default() -> Self {
        Self {
            use_hierarchical_guidance: true,
            use_scheduled_mixing: true,
            use_distance_gate: true,
            use_pgr: true,
            pgr_interval: 50,
            pgr_fraction: 0.10,
            sigma0_scale: 0.10,
            sigma_end_scale: 0.01,
            use_obl: true,
            use_reflect_damp: true,
            eta: 0.5,
            use_lowdim_stabilization: true,
            lowdim_threshold: 3,
            vmax_scale_lowdim: 0.25,
            group_count: 8,
        }
    }
}

impl StrategyConfig {
    /// Full MAWDO.
    pub fn mawdo() -> Self {
        Self::default()
    }

    /// Every enhancement off with a single group: plain AWDO.
    pub fn awdo() -> Self {
        Self {
            use_hierarchical_guidance: false,
            use_scheduled_mixing: false,
            use_distance_gate: false,
            use_pgr: false,
            use_obl: false,
            use_reflect_damp: false,
            use_lowdim_stabilization: false,
            group_count: 1,
            ..Self::default()
        }
    }

    pub fn preset(variant: Variant) -> Self {
        let base = Self::awdo();
        match variant {
            Variant::Mawdo1 => Self {
                group_count: 8,
                ..base
            },
            Variant::Mawdo2 => Self {
                use_hierarchical_guidance: true,
                use_scheduled_mixing: true,
                ..base
            },
            Variant::Mawdo3 => Self {
                use_pgr: true,
                use_obl: true,
                ..base
            },
            Variant::Mawdo4 => Self {
                use_lowdim_stabilization: true,
                ..base
            },
            Variant::Full => Self::mawdo(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidConfig(msg));
        if self.group_count == 0 {
            return fail("group_count must be >= 1".into());
        }
        if !(self.pgr_fraction > 0.0 && self.pgr_fraction <= 0.5) {
            return fail(format!(
                "pgr_fraction {} not in (0, 0.5]",
                self.pgr_fraction
            ));
        }
        if self.pgr_interval == 0 {
            return fail("pgr_interval must be >= 1".into());
        }
        if !(self.eta > 0.0 && self.eta < 1.0) {
            return fail(format!("eta {} not in (0, 1)", self.eta));
        }
        if !(self.sigma_end_scale >= 0.0 && self.sigma_end_scale <= self.sigma0_scale) {
            return fail(format!(
                "sigma_end_scale {} must lie in [0, sigma0_scale = {}]",
                self.sigma_end_scale, self.sigma0_scale
            ));
        }
        if !(self.vmax_scale_lowdim > 0.0 && self.vmax_scale_lowdim <= 1.0) {
            return fail(format!(
                "vmax_scale_lowdim {} not in (0, 1]",
                self.vmax_scale_lowdim
            ));
        }
        Ok(())
    }

    /// Whether the low-dimensional measures apply to a `dim`-dimensional
    /// problem.
    pub fn lowdim_active(&self, dim: usize) -> bool {
        self.use_lowdim_stabilization && dim <= self.lowdim_threshold
    }
}

/// Ablation variants: AWDO plus a single enhancement, and the full
/// algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Multi-group parallelism.
    Mawdo1,
    /// Scheduled triple guidance.
    Mawdo2,
    /// Periodic guided restart with opposition-based learning.
    Mawdo3,
    /// Low-dimensional stabilization.
    Mawdo4,
    Full,
}

impl Variant {
    pub const ALL: [Variant; 5] = [
        Variant::Mawdo1,
        Variant::Mawdo2,
        Variant::Mawdo3,
        Variant::Mawdo4,
        Variant::Full,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Variant::Mawdo1 => "MAWDO-1",
            Variant::Mawdo2 => "MAWDO-2",
            Variant::Mawdo3 => "MAWDO-3",
            Variant::Mawdo4 => "MAWDO-4",
            Variant::Full => "MAWDO",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownId {
                kind: "ablation variant",
                name: s.to_string(),
                valid: Variant::ALL.map(Variant::label).join(", "),
            })
    }
}
