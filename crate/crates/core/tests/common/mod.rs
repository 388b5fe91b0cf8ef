//! Straight-from-formula transcription of the sixteen benchmark functions,
//! written independently of the library.

#![allow(dead_code)]

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use windplan::benchmarks::{evaluate, spec, FunctionId};

pub const ORACLE_POINTS: usize = 1000;
pub const ORACLE_REL_TOL: f64 = 1e-9;

fn u(x: f64, a: f64, k: f64, m: i32) -> f64 {
    if x > a {
        k * (x - a).powi(m)
    } else if x < -a {
        k * (-x - a).powi(m)
    } else {
        0.0
    }
}

fn shekel(x: &[f64], m: usize) -> f64 {
    let a = [
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
    let c = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];
    let mut total = 0.0;
    for i in 0..m {
        let mut d = 0.0;
        for j in 0..4 {
            d += (x[j] - a[i][j]) * (x[j] - a[i][j]);
        }
        total += 1.0 / (d + c[i]);
    }
    -total
}

pub fn oracle(f: u8, x: &[f64], noise: f64) -> f64 {
    let n = x.len();
    match f {
        1 => (0..n).map(|i| x[i] * x[i]).sum(),
        2 => {
            let mut s = 0.0;
            let mut p = 1.0;
            for v in x {
                s += v.abs();
                p *= v.abs();
            }
            s + p
        }
        3 => {
            let mut total = 0.0;
            for i in 0..n {
                let inner: f64 = x[..=i].iter().sum();
                total += inner * inner;
            }
            total
        }
        4 => x.iter().map(|v| v.abs()).fold(f64::MIN, f64::max),
        5 => (0..n - 1)
            .map(|i| 100.0 * (x[i + 1] - x[i] * x[i]).powi(2) + (x[i] - 1.0).powi(2))
            .sum(),
        6 => (0..n).map(|i| (i + 1) as f64 * x[i].powi(4)).sum::<f64>() + noise,
        7 => (0..n)
            .map(|i| x[i] * x[i] - 10.0 * (2.0 * PI * x[i]).cos() + 10.0)
            .sum(),
        8 => (0..n)
            .map(|i| {
                let s = x[i] - if i == 0 { 0.0 } else { x[i - 1] };
                s.abs() + 0.2 * s * s
            })
            .sum(),
        9 | 10 => {
            let y: Vec<f64> = x.iter().map(|v| 1.0 + (v + 1.0) / 4.0).collect();
            let s = |v: f64| (PI * v).sin().powi(2);
            if f == 9 {
                let mut t = 0.0;
                for i in 0..n - 1 {
                    t += 10.0 * s(y[i]) + (y[i] - 1.0).powi(2) * (1.0 + 10.0 * s(y[i + 1]));
                }
                t + (y[n - 1] - 1.0).powi(2) + x.iter().map(|&v| u(v, 5.0, 100.0, 4)).sum::<f64>()
            } else {
                let mut t = 10.0 * s(y[0]);
                for i in 0..n - 1 {
                    t += (y[i] - 1.0).powi(2) * (1.0 + 10.0 * s(y[i + 1]));
                }
                t += (y[n - 1] - 1.0).powi(2);
                PI / n as f64 * t + x.iter().map(|&v| u(v, 10.0, 100.0, 4)).sum::<f64>()
            }
        }
        11 => x.iter().map(|&v| (v * v.sin() + 0.1 * v).abs()).sum(),
        12 => {
            let (a, b) = (x[0], x[1]);
            4.0 * a.powi(2) - 2.1 * a.powi(4) + a.powi(6) / 3.0 + a * b - 4.0 * b.powi(2)
                + 4.0 * b.powi(4)
        }
        13 => {
            let a = [
                [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
                [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
                [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
                [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
            ];
            let c = [1.0, 1.2, 3.0, 3.2];
            let p = [
                [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
                [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
                [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
                [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
            ];
            let mut total = 0.0;
            for i in 0..4 {
                let mut e = 0.0;
                for j in 0..6 {
                    e += a[i][j] * (x[j] - p[i][j]).powi(2);
                }
                total += c[i] * (-e).exp();
            }
            -total
        }
        14 => shekel(x, 5),
        15 => shekel(x, 7),
        16 => shekel(x, 10),
        _ => unreachable!(),
    }
}

/// Compares the library with [`oracle`] at `points` uniform random points
/// per function and returns a description of every disagreement beyond
/// `rel_tol` (relative, with an absolute floor of `rel_tol` near zero).
pub fn oracle_mismatches(points: usize, rel_tol: f64) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut bad = Vec::new();
    for id in FunctionId::all() {
        let s = spec(id);
        for k in 0..points {
            let x: Vec<f64> = (0..s.dim)
                .map(|d| rng.random_range(s.bounds.lower()[d]..=s.bounds.upper()[d]))
                .collect();
            let seed = k as u64;
            let got = evaluate(id, &x, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
            let noise = ChaCha8Rng::seed_from_u64(seed).random::<f64>();
            let want = oracle(id.number(), &x, noise);
            if (got - want).abs() > rel_tol * want.abs().max(1.0) {
                bad.push(format!("{id} at point {k}: {got} vs oracle {want}"));
            }
        }
    }
    bad
}
