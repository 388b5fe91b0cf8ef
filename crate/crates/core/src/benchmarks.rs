//! The sixteen benchmark functions F1 to F16: eleven 30-dimensional
//! unimodal and multimodal functions followed by the six-hump camel,
//! Hartmann-6 and the three Shekel functions.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, RngCore};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::Stream;
use crate::swarm::{Bounds, EvalError, Objective};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FunctionId(u8);

impl FunctionId {
    pub fn new(number: u8) -> Result<Self> {
        if (1..=16).contains(&number) {
            Ok(Self(number))
        } else {
            Err(unknown_function(&number.to_string()))
        }
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = FunctionId> {
        (1..=16).map(FunctionId)
    }
}

fn unknown_function(name: &str) -> Error {
    Error::UnknownId {
        kind: "function",
        name: name.to_string(),
        valid: "F1..F16".into(),
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0)
    }
}

impl FromStr for FunctionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.strip_prefix(['F', 'f'])
            .and_then(|n| n.parse::<u8>().ok())
            .and_then(|n| FunctionId::new(n).ok())
            .ok_or_else(|| unknown_function(s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Unimodal,
    Multimodal,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkSpec {
    pub id: FunctionId,
    pub dim: usize,
    pub bounds: Bounds,
    /// Minimum as tabulated (two decimals for F12 to F16).
    pub known_min: f64,
    pub kind: Kind,
}

/// Parameters of the boundary penalty `u(x; a, k, m)` used by F9 and F10.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PenaltyParams {
    pub a: f64,
    pub k: f64,
    pub m: i32,
}

pub const F9_PENALTY: PenaltyParams = PenaltyParams {
    a: 5.0,
    k: 100.0,
    m: 4,
};

pub const F10_PENALTY: PenaltyParams = PenaltyParams {
    a: 10.0,
    k: 100.0,
    m: 4,
};

pub fn penalty(x: f64, p: PenaltyParams) -> f64 {
    if x > p.a {
        p.k * (x - p.a).powi(p.m)
    } else if x < -p.a {
        p.k * (-x - p.a).powi(p.m)
    } else {
        0.0
    }
}

pub fn spec(id: FunctionId) -> BenchmarkSpec {
    use Kind::*;
    let (dim, lo, hi, known_min, kind) = match id.0 {
        1..=4 => (30, -100.0, 100.0, 0.0, Unimodal),
        5 => (30, -30.0, 30.0, 0.0, Unimodal),
        6 => (30, -1.28, 1.28, 0.0, Unimodal),
        7 | 8 => (30, -100.0, 100.0, 0.0, Multimodal),
        9 | 10 => (30, -50.0, 50.0, 0.0, Multimodal),
        11 => (30, -10.0, 10.0, 0.0, Multimodal),
        12 => (2, -5.0, 5.0, -1.03, Multimodal),
        13 => (6, 0.0, 1.0, -3.32, Multimodal),
        14 => (4, 0.0, 10.0, -10.15, Multimodal),
        15 => (4, 0.0, 10.0, -10.40, Multimodal),
        16 => (4, 0.0, 10.0, -10.54, Multimodal),
        _ => unreachable!("FunctionId is always in 1..=16"),
    };
    BenchmarkSpec {
        id,
        dim,
        bounds: Bounds::uniform(dim, lo, hi).expect("table bounds are valid"),
        known_min,
        kind,
    }
}

/// All sixteen specs in order.
pub fn suite() -> Vec<BenchmarkSpec> {
    FunctionId::all().map(spec).collect()
}

const HARTMANN_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];
const HARTMANN_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
const HARTMANN_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

pub(crate) const SHEKEL_A: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];
pub(crate) const SHEKEL_C: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

fn shekel(x: &[f64], m: usize) -> f64 {
    -SHEKEL_A[..m]
        .iter()
        .zip(&SHEKEL_C)
        .map(|(a, c)| {
            let d2: f64 = x.iter().zip(a).map(|(xi, ai)| (xi - ai).powi(2)).sum();
            1.0 / (d2 + c)
        })
        .sum::<f64>()
}

fn penalized_y(x: &[f64]) -> Vec<f64> {
    x.iter().map(|v| 1.0 + (v + 1.0) / 4.0).collect()
}

fn sin2(v: f64) -> f64 {
    let s = v.sin();
    s * s
}

/// Evaluates function `id` at `x`. Only F6 consumes `noise`: one
/// `U[0, 1)` draw per call.
pub fn evaluate(id: FunctionId, x: &[f64], noise: &mut dyn RngCore) -> Result<f64> {
    let dim = spec(id).dim;
    if x.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: x.len(),
        });
    }
    let n = x.len();
    let value = match id.0 {
        1 => x.iter().map(|v| v * v).sum(),
        2 => {
            let abs = x.iter().map(|v| v.abs());
            abs.clone().sum::<f64>() + abs.product::<f64>()
        }
        3 => {
            let mut prefix = 0.0;
            x.iter()
                .map(|v| {
                    prefix += v;
                    prefix * prefix
                })
                .sum()
        }
        4 => x.iter().fold(0.0, |m: f64, v| m.max(v.abs())),
        5 => x
            .windows(2)
            .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
            .sum(),
        6 => {
            let quartic: f64 = x
                .iter()
                .enumerate()
                .map(|(i, v)| (i + 1) as f64 * v.powi(4))
                .sum();
            quartic + noise.random::<f64>()
        }
        7 => x
            .iter()
            .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
            .sum(),
        8 => {
            let mut prev = 0.0;
            x.iter()
                .map(|&v| {
                    let s = v - prev;
                    prev = v;
                    s.abs() + 0.2 * s * s
                })
                .sum()
        }
        9 => {
            let y = penalized_y(x);
            let body: f64 = y
                .windows(2)
                .map(|w| {
                    10.0 * sin2(PI * w[0]) + (w[0] - 1.0).powi(2) * (1.0 + 10.0 * sin2(PI * w[1]))
                })
                .sum();
            body + (y[n - 1] - 1.0).powi(2) + x.iter().map(|v| penalty(*v, F9_PENALTY)).sum::<f64>()
        }
        10 => {
            let y = penalized_y(x);
            let inner: f64 = y
                .windows(2)
                .map(|w| (w[0] - 1.0).powi(2) * (1.0 + 10.0 * sin2(PI * w[1])))
                .sum();
            PI / n as f64 * (10.0 * sin2(PI * y[0]) + inner + (y[n - 1] - 1.0).powi(2))
                + x.iter().map(|v| penalty(*v, F10_PENALTY)).sum::<f64>()
        }
        11 => x.iter().map(|v| (v * v.sin() + 0.1 * v).abs()).sum(),
        12 => {
            let (a, b) = (x[0], x[1]);
            4.0 * a * a - 2.1 * a.powi(4) + a.powi(6) / 3.0 + a * b - 4.0 * b * b + 4.0 * b.powi(4)
        }
        13 => -HARTMANN_C
            .iter()
            .zip(HARTMANN_A.iter().zip(&HARTMANN_P))
            .map(|(c, (a, p))| {
                let e: f64 = (0..6).map(|j| a[j] * (x[j] - p[j]).powi(2)).sum();
                c * (-e).exp()
            })
            .sum::<f64>(),
        14 => shekel(x, 5),
        15 => shekel(x, 7),
        16 => shekel(x, 10),
        _ => unreachable!(),
    };
    Ok(value)
}

/// A benchmark function as an [`Objective`], carrying its own noise stream.
pub struct BenchmarkObjective {
    spec: BenchmarkSpec,
    noise: Stream,
}

impl BenchmarkObjective {
    pub fn new(id: FunctionId, noise: Stream) -> Self {
        Self {
            spec: spec(id),
            noise,
        }
    }

    pub fn spec(&self) -> &BenchmarkSpec {
        &self.spec
    }
}

impl Objective for BenchmarkObjective {
    fn dim(&self) -> usize {
        self.spec.dim
    }

    fn evaluate(&mut self, x: &[f64]) -> std::result::Result<f64, EvalError> {
        Ok(evaluate(self.spec.id, x, &mut self.noise)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream_from_seed;
    use approx::assert_abs_diff_eq;

    fn f(id: u8, x: &[f64]) -> f64 {
        evaluate(FunctionId::new(id).unwrap(), x, &mut stream_from_seed(0)).unwrap()
    }

    #[test]
    fn suite_metadata() {
        let s = suite();
        assert_eq!(s.len(), 16);
        assert_eq!(s[0].bounds, Bounds::uniform(30, -100.0, 100.0).unwrap());
        assert_eq!(s[11].dim, 2);
        assert_eq!(s[12].known_min, -3.32);
        let dims: Vec<usize> = s.iter().map(|b| b.dim).collect();
        assert_eq!(&dims[..11], &[30; 11]);
        assert_eq!(&dims[11..], &[2, 6, 4, 4, 4]);
        assert!(s[..6].iter().all(|b| b.kind == Kind::Unimodal));
        assert!(s[6..].iter().all(|b| b.kind == Kind::Multimodal));
    }

    #[test]
    fn zeros_at_known_minimizers() {
        let zero = [0.0; 30];
        for id in [1, 2, 3, 4, 7, 8, 11] {
            assert_eq!(f(id, &zero), 0.0, "F{id}");
        }
        assert_eq!(f(5, &[1.0; 30]), 0.0);
        assert_abs_diff_eq!(f(9, &[-1.0; 30]), 0.0, epsilon = 1e-25);
        assert_abs_diff_eq!(f(10, &[-1.0; 30]), 0.0, epsilon = 1e-25);
    }

    #[test]
    fn low_dimensional_minima() {
        assert_abs_diff_eq!(f(12, &[0.0898, -0.7126]), -1.0316, epsilon = 1e-3);
        assert_abs_diff_eq!(f(12, &[-0.0898, 0.7126]), -1.0316, epsilon = 1e-3);
        let h = [0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.6573];
        assert_abs_diff_eq!(f(13, &h), -3.32237, epsilon = 1e-4);
    }

    #[test]
    fn f6_noise_is_one_draw_per_call() {
        let id = FunctionId::new(6).unwrap();
        let mut noise = stream_from_seed(1);
        let zero = [0.0; 30];
        let samples: Vec<f64> = (0..20_000)
            .map(|_| evaluate(id, &zero, &mut noise).unwrap())
            .collect();
        assert!(samples.iter().all(|v| (0.0..1.0).contains(v)));
        let mean = samples.iter().sum::<f64>() / samples.len() as f64;
        let var =
            samples.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (samples.len() - 1) as f64;
        assert_abs_diff_eq!(var, 1.0 / 12.0, epsilon = 0.003);
        let again: Vec<f64> = {
            let mut noise = stream_from_seed(1);
            (0..5)
                .map(|_| evaluate(id, &zero, &mut noise).unwrap())
                .collect()
        };
        assert_eq!(&samples[..5], again.as_slice());
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let id = FunctionId::new(1).unwrap();
        assert!(evaluate(id, &[0.0; 29], &mut stream_from_seed(0)).is_err());
    }

    #[test]
    fn ids_parse() {
        assert_eq!("F16".parse::<FunctionId>().unwrap().number(), 16);
        assert_eq!("f3".parse::<FunctionId>().unwrap().number(), 3);
        for bad in ["F0", "F17", "G1", "", "F"] {
            assert!(bad.parse::<FunctionId>().is_err(), "{bad}");
        }
    }

    #[test]
    fn penalty_pieces() {
        let p = F9_PENALTY;
        assert_eq!(penalty(4.0, p), 0.0);
        assert_eq!(penalty(-5.0, p), 0.0);
        assert_eq!(penalty(7.0, p), 100.0 * 16.0);
        assert_eq!(penalty(-6.0, p), 100.0);
    }
}
