//! The individual update rules of the wind driven family, as pure
//! functions over slices so each can be exercised on its own.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::swarm::Bounds;

/// Physical coefficients of the velocity update: friction `a`, gravity `g`,
/// pressure gradient `rt` and Coriolis `c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Coefficients {
    pub a: f64,
    pub g: f64,
    pub rt: f64,
    pub c: f64,
}

impl Default for Coefficients {
    /// Fixed coefficients of the classic WDO.
    fn default() -> Self {
        Self {
            a: 0.4,
            g: 0.2,
            rt: 3.0,
            c: 0.4,
        }
    }
}

impl Coefficients {
    pub fn new(a: f64, g: f64, rt: f64, c: f64) -> Result<Self> {
        let coeffs = Self { a, g, rt, c };
        if [a, g, rt, c].iter().all(|v| v.is_finite() && *v >= 0.0) {
            Ok(coeffs)
        } else {
            Err(Error::InvalidArgument(format!(
                "coefficients must be finite and non-negative: {coeffs:?}"
            )))
        }
    }

    /// Adaptive draw: all four coefficients uniform on `[0, 1]`, in the
    /// order a, g, rt, c.
    pub fn sample_unit<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self {
            a: rng.random(),
            g: rng.random(),
            rt: rng.random(),
            c: rng.random(),
        }
    }

    /// Per-group coefficients for low-dimensional problems.
    pub fn sample_group<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self {
            a: rng.random_range(0.15..=0.45),
            g: rng.random_range(0.15..=0.45),
            rt: rng.random_range(0.90..=1.50),
            c: rng.random_range(0.10..=0.50),
        }
    }
}

/// Weights of the personal, group and global leaders in the guidance
/// vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GuidanceWeights {
    pub w1: f64,
    pub w2: f64,
    pub w3: f64,
}

impl GuidanceWeights {
    pub const SIMPLEX_TOLERANCE: f64 = 1e-12;

    /// Exploration-heavy starting mix, also used when scheduling is off.
    pub const INITIAL: GuidanceWeights = GuidanceWeights {
        w1: 0.6,
        w2: 0.3,
        w3: 0.1,
    };

    pub const FINAL: GuidanceWeights = GuidanceWeights {
        w1: 0.2,
        w2: 0.3,
        w3: 0.5,
    };

    pub fn new(w1: f64, w2: f64, w3: f64) -> Result<Self> {
        let in_unit = [w1, w2, w3].iter().all(|w| (0.0..=1.0).contains(w));
        if !in_unit || (w1 + w2 + w3 - 1.0).abs() > Self::SIMPLEX_TOLERANCE {
            return Err(Error::InvalidArgument(format!(
                "guidance weights ({w1}, {w2}, {w3}) are not on the simplex"
            )));
        }
        Ok(Self { w1, w2, w3 })
    }

    pub fn sum(&self) -> f64 {
        self.w1 + self.w2 + self.w3
    }
}

/// Linear schedule from [`GuidanceWeights::INITIAL`] at `t = 1` to
/// [`GuidanceWeights::FINAL`] at `t = T`.
pub fn scheduled_weights(t: usize, max_t: usize) -> Result<GuidanceWeights> {
    if t == 0 || t > max_t {
        return Err(Error::InvalidArgument(format!(
            "iteration {t} outside 1..={max_t}"
        )));
    }
    let lambda = if max_t == 1 {
        0.0
    } else {
        (t - 1) as f64 / (max_t - 1) as f64
    };
    Ok(weights_at(lambda))
}

/// Schedule evaluated at progress `lambda` in `[0, 1]`.
pub fn weights_at(lambda: f64) -> GuidanceWeights {
    let (a, b) = (GuidanceWeights::INITIAL, GuidanceWeights::FINAL);
    GuidanceWeights {
        w1: a.w1 * (1.0 - lambda) + b.w1 * lambda,
        w2: a.w2 * (1.0 - lambda) + b.w2 * lambda,
        w3: a.w3 * (1.0 - lambda) + b.w3 * lambda,
    }
}

fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, actual })
    }
}

/// `w1·pbest + w2·gbest + w3·tbest`. Weights are taken as given so that a
/// gated `w3` may leave the sum below one.
pub fn compose_guidance(
    pbest: &[f64],
    gbest: &[f64],
    tbest: &[f64],
    w: GuidanceWeights,
) -> Result<Vec<f64>> {
    check_len(pbest.len(), gbest.len())?;
    check_len(pbest.len(), tbest.len())?;
    Ok(pbest
        .iter()
        .zip(gbest)
        .zip(tbest)
        .map(|((p, g), t)| w.w1 * p + w.w2 * g + w.w3 * t)
        .collect())
}

/// [`compose_guidance`] taken about `centre`: `centre + sum w_i (x_i - centre)`.
/// Identical to the plain blend when the weights sum to 1; when gating has
/// removed weight, the guide shrinks toward `centre` rather than the origin.
pub fn compose_guidance_about(
    centre: &[f64],
    pbest: &[f64],
    gbest: &[f64],
    tbest: &[f64],
    w: GuidanceWeights,
) -> Result<Vec<f64>> {
    check_len(pbest.len(), centre.len())?;
    check_len(pbest.len(), gbest.len())?;
    check_len(pbest.len(), tbest.len())?;
    Ok((0..pbest.len())
        .map(|d| {
            let c = centre[d];
            c + w.w1 * (pbest[d] - c) + w.w2 * (gbest[d] - c) + w.w3 * (tbest[d] - c)
        })
        .collect())
}

/// Attenuates the global weight by the group leader's distance to the
/// global best, relative to `d_max` and saturating at 1.
pub fn distance_gate(gbest: &[f64], tbest: &[f64], d_max: f64, w3: f64) -> f64 {
    let dist = gbest
        .iter()
        .zip(tbest)
        .map(|(g, t)| (g - t) * (g - t))
        .sum::<f64>()
        .sqrt();
    w3 * (dist / d_max).min(1.0)
}

/// Fresh uniformly random permutation of `0..dim`.
pub fn random_permutation<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..dim).collect();
    perm.shuffle(rng);
    perm
}

fn check_perm(perm: &[usize], dim: usize) -> Result<()> {
    check_len(dim, perm.len())?;
    let mut seen = vec![false; dim];
    for &p in perm {
        if p >= dim || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidArgument(format!(
                "{perm:?} is not a permutation of 0..{dim}"
            )));
        }
    }
    Ok(())
}

/// Inputs of one velocity update.
#[derive(Debug, Clone, Copy)]
pub struct VelocityInput<'a> {
    pub velocity: &'a [f64],
    pub position: &'a [f64],
    pub guide: &'a [f64],
    pub perm: &'a [usize],
    pub vmax: &'a [f64],
}

impl VelocityInput<'_> {
    fn validate(&self) -> Result<()> {
        let dim = self.velocity.len();
        check_len(dim, self.position.len())?;
        check_len(dim, self.guide.len())?;
        check_len(dim, self.vmax.len())?;
        check_perm(self.perm, dim)
    }
}

/// Shared body of the velocity rules: friction, a caller-supplied gravity
/// term, pressure toward the guide and the permuted Coriolis term, the last
/// two divided by `rank`. The result is clamped to `[-vmax, vmax]`.
pub fn velocity_with_gravity(
    input: VelocityInput<'_>,
    gravity: &[f64],
    coeffs: Coefficients,
    rank: f64,
) -> Result<Vec<f64>> {
    input.validate()?;
    check_len(input.velocity.len(), gravity.len())?;
    let u = input.velocity;
    Ok((0..u.len())
        .map(|d| {
            let v = (1.0 - coeffs.a) * u[d]
                + gravity[d]
                + coeffs.rt * (input.guide[d] - input.position[d]) / rank
                + coeffs.c * u[input.perm[d]] / rank;
            v.clamp(-input.vmax[d], input.vmax[d])
        })
        .collect())
}

fn origin_gravity(position: &[f64], g: f64) -> Vec<f64> {
    position.iter().map(|x| -g * x).collect()
}

/// Gravity toward the centre of `bounds`. The classic rules work in a box
/// normalized to `[-1, 1]` where the centre is the origin; for a box
/// symmetric about the origin this is exactly `-g * x`.
pub fn box_gravity(position: &[f64], bounds: &Bounds, g: f64) -> Vec<f64> {
    position
        .iter()
        .zip(bounds.lower().iter().zip(bounds.upper()))
        .map(|(x, (lo, hi))| -g * (x - 0.5 * (lo + hi)))
        .collect()
}

/// Classic WDO velocity with gravity toward the origin: fixed coefficients,
/// no rank scaling.
pub fn wdo_velocity(input: VelocityInput<'_>, coeffs: Coefficients) -> Result<Vec<f64>> {
    input.validate()?;
    velocity_with_gravity(
        input,
        &origin_gravity(input.position, coeffs.g),
        coeffs,
        1.0,
    )
}

/// Adaptive WDO velocity with gravity toward the origin: pressure and
/// Coriolis terms are divided by the particle's 1-based fitness rank.
pub fn awdo_velocity(
    input: VelocityInput<'_>,
    coeffs: Coefficients,
    rank: usize,
) -> Result<Vec<f64>> {
    if rank == 0 {
        return Err(Error::InvalidArgument("rank must be >= 1".into()));
    }
    input.validate()?;
    velocity_with_gravity(
        input,
        &origin_gravity(input.position, coeffs.g),
        coeffs,
        rank as f64,
    )
}

/// Gravity toward the group's mean position instead of the origin.
pub fn centroid_gravity(positions: &[&[f64]], x: &[f64], g: f64) -> Result<Vec<f64>> {
    if positions.is_empty() {
        return Err(Error::InvalidArgument("empty group".into()));
    }
    let mut centroid = vec![0.0; x.len()];
    for p in positions {
        check_len(x.len(), p.len())?;
        for (c, v) in centroid.iter_mut().zip(p.iter()) {
            *c += v;
        }
    }
    let n = positions.len() as f64;
    Ok(x.iter()
        .zip(&centroid)
        .map(|(xi, c)| -g * (xi - c / n))
        .collect())
}

/// `lb + ub - x`.
pub fn opposite_candidate(x: &[f64], bounds: &Bounds) -> Vec<f64> {
    x.iter()
        .zip(bounds.lower().iter().zip(bounds.upper()))
        .map(|(v, (lo, hi))| lo + hi - v)
        .collect()
}

/// Position update `x + u` carried out in the box's `[-1, 1]` frame, where
/// the classic rules keep their particles, and mapped back. Rounding in the
/// frame snaps coordinates within about `1e-16 * width` of the box centre
/// onto the centre exactly.
pub fn move_in_unit_frame(x: &mut [f64], u: &[f64], bounds: &Bounds) {
    for (d, (xi, ui)) in x.iter_mut().zip(u).enumerate() {
        let (lo, w) = (bounds.lower()[d], bounds.width(d));
        let unit = 2.0 * (*xi - lo) / w - 1.0 + 2.0 * ui / w;
        *xi = lo + (unit + 1.0) / 2.0 * w;
    }
}

/// Mirrors out-of-range coordinates back across the violated bound,
/// reversing and damping the matching velocity component by `eta` on each
/// reflection.
pub fn reflect_damp(x: &mut [f64], u: &mut [f64], bounds: &Bounds, eta: f64) {
    for d in 0..x.len() {
        let (lo, hi) = (bounds.lower()[d], bounds.upper()[d]);
        let width = hi - lo;
        while x[d] < lo || x[d] > hi {
            let bound = if x[d] > hi { hi } else { lo };
            if (x[d] - bound).abs() >= width {
                // a mirror image would leave the box again on the other side
                // forever; settle on the violated bound
                x[d] = bound;
                u[d] *= -eta;
                break;
            }
            x[d] = 2.0 * bound - x[d];
            u[d] *= -eta;
        }
    }
}

/// Quarter-speed cap for problems at or below the low-dimension threshold.
pub fn tighten_vmax(vmax: &[f64], dim: usize, threshold: usize, scale: f64) -> Vec<f64> {
    if dim <= threshold {
        vmax.iter().map(|v| v * scale).collect()
    } else {
        vmax.to_vec()
    }
}

/// Standard deviation of guided restarts at iteration `t`, decaying
/// linearly from `sigma0_scale` to `sigma_end_scale` of each box width.
pub fn restart_sigma(
    bounds: &Bounds,
    t: usize,
    max_t: usize,
    sigma0_scale: f64,
    sigma_end_scale: f64,
) -> Vec<f64> {
    let progress = t as f64 / max_t as f64;
    let scale = sigma0_scale - (sigma0_scale - sigma_end_scale) * progress;
    bounds.widths().iter().map(|w| scale * w).collect()
}

/// Number of worst particles a restart replaces in a group of `size`.
pub fn restart_count(size: usize, fraction: f64) -> usize {
    // products like 0.1 * 30 land one ulp above an integer
    ((fraction * size as f64 - 1e-9).ceil().max(0.0) as usize).min(size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;

    fn input<'a>(
        u: &'a [f64],
        x: &'a [f64],
        b: &'a [f64],
        perm: &'a [usize],
        vmax: &'a [f64],
    ) -> VelocityInput<'a> {
        VelocityInput {
            velocity: u,
            position: x,
            guide: b,
            perm,
            vmax,
        }
    }

    const WIDE: [f64; 2] = [1e9, 1e9];

    #[test]
    fn wdo_at_rest_stays_at_rest() {
        let v = wdo_velocity(
            input(&[0.0, 0.0], &[0.0, 0.0], &[0.0, 0.0], &[1, 0], &WIDE),
            Coefficients::default(),
        )
        .unwrap();
        assert_eq!(v, vec![0.0, 0.0]);
    }

    #[test]
    fn wdo_pressure_only() {
        let c = Coefficients::new(1.0, 0.0, 1.0, 0.0).unwrap();
        let v = wdo_velocity(
            input(&[5.0, -3.0], &[0.0, 0.0], &[2.0, 2.0], &[0, 1], &WIDE),
            c,
        )
        .unwrap();
        assert_eq!(v, vec![2.0, 2.0]);
    }

    #[test]
    fn wdo_term_by_term() {
        // (1-a)U - gX + RT(B-X) with a=0.3, g=0.2, RT=1
        // d0: 0.7*1 - 0.2 + 1 = 1.5 ; d1: 0 - 0.2 + 1 = 0.8
        let c = Coefficients::new(0.3, 0.2, 1.0, 0.0).unwrap();
        let v = wdo_velocity(
            input(&[1.0, 0.0], &[1.0, 1.0], &[2.0, 2.0], &[0, 1], &WIDE),
            c,
        )
        .unwrap();
        assert_abs_diff_eq!(v[0], 1.5, epsilon = 1e-15);
        assert_abs_diff_eq!(v[1], 0.8, epsilon = 1e-15);
    }

    #[test]
    fn wdo_rejects_mismatch_and_bad_perm() {
        let c = Coefficients::default();
        assert!(wdo_velocity(input(&[0.0], &[0.0, 0.0], &[0.0, 0.0], &[0, 1], &WIDE), c).is_err());
        assert!(wdo_velocity(
            input(&[0.0, 0.0], &[0.0, 0.0], &[0.0, 0.0], &[0, 0], &WIDE),
            c
        )
        .is_err());
    }

    #[test]
    fn velocity_is_clamped() {
        let c = Coefficients::new(0.0, 0.0, 10.0, 0.0).unwrap();
        let v = wdo_velocity(input(&[0.0], &[0.0], &[100.0], &[0], &[5.0]), c).unwrap();
        assert_eq!(v, vec![5.0]);
    }

    #[test]
    fn box_gravity_points_to_centre() {
        let b = Bounds::new(vec![0.0, -10.0], vec![10.0, 10.0]).unwrap();
        assert_eq!(box_gravity(&[10.0, 4.0], &b, 0.5), vec![-2.5, -2.0]);
        let sym = Bounds::uniform(2, -3.0, 3.0).unwrap();
        assert_eq!(
            box_gravity(&[1.0, -2.0], &sym, 0.2),
            origin_gravity(&[1.0, -2.0], 0.2)
        );
    }

    #[test]
    fn awdo_rank_one() {
        let c = Coefficients::new(0.0, 0.0, 1.0, 0.0).unwrap();
        let v = awdo_velocity(input(&[0.0], &[1.0], &[3.0], &[0], &[1e9]), c, 1).unwrap();
        assert_eq!(v, vec![2.0]);
    }

    #[test]
    fn awdo_rank_two() {
        // 0.5*4 + 1*(2-0)/2 = 3
        let c = Coefficients::new(0.5, 0.0, 1.0, 0.0).unwrap();
        let v = awdo_velocity(input(&[4.0], &[0.0], &[2.0], &[0], &[1e9]), c, 2).unwrap();
        assert_abs_diff_eq!(v[0], 3.0, epsilon = 1e-15);
    }

    #[test]
    fn awdo_large_rank_suppresses_pressure_and_coriolis() {
        let c = Coefficients::new(0.3, 0.2, 0.9, 0.8).unwrap();
        let inp = input(&[1.0, -2.0], &[3.0, 4.0], &[-5.0, 6.0], &[1, 0], &WIDE);
        let v = awdo_velocity(inp, c, 1_000_000_000).unwrap();
        let limit: Vec<f64> = (0..2)
            .map(|d| 0.7 * inp.velocity[d] - 0.2 * inp.position[d])
            .collect();
        for d in 0..2 {
            assert_abs_diff_eq!(v[d], limit[d], epsilon = 1e-8);
        }
    }

    #[test]
    fn awdo_rejects_rank_zero() {
        let c = Coefficients::default();
        assert!(awdo_velocity(input(&[0.0], &[0.0], &[0.0], &[0], &[1.0]), c, 0).is_err());
    }

    #[test]
    fn guidance_fixed_point_and_pure_pbest() {
        let v = [1.5, -2.0];
        let w = GuidanceWeights::new(0.2, 0.3, 0.5).unwrap();
        assert_eq!(compose_guidance(&v, &v, &v, w).unwrap(), v.to_vec());
        let pure = GuidanceWeights::new(1.0, 0.0, 0.0).unwrap();
        assert_eq!(
            compose_guidance(&[1.0, 2.0], &[3.0, 4.0], &[5.0, 6.0], pure).unwrap(),
            vec![1.0, 2.0]
        );
    }

    #[test]
    fn guidance_weighted_sum() {
        let w = GuidanceWeights::new(0.2, 0.3, 0.5).unwrap();
        let b = compose_guidance(&[0.0, 0.0], &[1.0, 0.0], &[0.0, 1.0], w).unwrap();
        let about =
            compose_guidance_about(&[7.0, -3.0], &[0.0, 0.0], &[1.0, 0.0], &[0.0, 1.0], w).unwrap();
        assert_abs_diff_eq!(about[0], b[0], epsilon = 1e-12);
        assert_abs_diff_eq!(about[1], b[1], epsilon = 1e-12);
        let gated = GuidanceWeights {
            w1: 0.6,
            w2: 0.3,
            w3: 0.0,
        };
        let shrunk = compose_guidance_about(&[10.0], &[20.0], &[20.0], &[0.0], gated).unwrap();
        assert_abs_diff_eq!(shrunk[0], 19.0, epsilon = 1e-12);
        assert_abs_diff_eq!(b[0], 0.3, epsilon = 1e-15);
        assert_abs_diff_eq!(b[1], 0.5, epsilon = 1e-15);
    }

    #[test]
    fn off_simplex_weights_rejected() {
        assert!(GuidanceWeights::new(0.5, 0.5, 0.5).is_err());
        assert!(GuidanceWeights::new(1.2, -0.2, 0.0).is_err());
    }

    #[test]
    fn schedule_endpoints_and_midpoint() {
        let first = scheduled_weights(1, 500).unwrap();
        assert_eq!((first.w1, first.w2, first.w3), (0.6, 0.3, 0.1));
        let last = scheduled_weights(500, 500).unwrap();
        assert_abs_diff_eq!(last.w1, 0.2, epsilon = 1e-15);
        assert_abs_diff_eq!(last.w2, 0.3, epsilon = 1e-15);
        assert_abs_diff_eq!(last.w3, 0.5, epsilon = 1e-15);
        let mid = scheduled_weights(51, 101).unwrap();
        assert_abs_diff_eq!(mid.w1, 0.4, epsilon = 1e-15);
        assert_abs_diff_eq!(mid.w2, 0.3, epsilon = 1e-15);
        assert_abs_diff_eq!(mid.w3, 0.3, epsilon = 1e-15);
        assert_eq!(scheduled_weights(1, 1).unwrap(), GuidanceWeights::INITIAL);
    }

    #[test]
    fn schedule_rejects_out_of_range() {
        assert!(scheduled_weights(0, 10).is_err());
        assert!(scheduled_weights(11, 10).is_err());
    }

    #[test]
    fn gate_cases() {
        assert_eq!(distance_gate(&[1.0, 1.0], &[1.0, 1.0], 10.0, 0.4), 0.0);
        assert_eq!(distance_gate(&[0.0, 0.0], &[30.0, 40.0], 10.0, 0.4), 0.4);
        // distance 2.5 of d_max 10
        assert_abs_diff_eq!(
            distance_gate(&[0.0, 0.0], &[1.5, 2.0], 10.0, 0.4),
            0.1,
            epsilon = 1e-15
        );
    }

    #[test]
    fn opposite_examples() {
        let b = Bounds::uniform(1, -5.0, 5.0).unwrap();
        assert_eq!(opposite_candidate(&[2.0], &b), vec![-2.0]);
        assert_eq!(opposite_candidate(&[0.0], &b), vec![0.0]);
        let unit = Bounds::uniform(1, 0.0, 1.0).unwrap();
        assert_abs_diff_eq!(opposite_candidate(&[0.3], &unit)[0], 0.7, epsilon = 1e-15);
    }

    #[test]
    fn reflect_single_violations() {
        let b = Bounds::uniform(1, -100.0, 100.0).unwrap();
        let (mut x, mut u) = (vec![104.0], vec![6.0]);
        reflect_damp(&mut x, &mut u, &b, 0.5);
        assert_eq!((x[0], u[0]), (96.0, -3.0));
        let (mut x, mut u) = (vec![-101.0], vec![-2.0]);
        reflect_damp(&mut x, &mut u, &b, 0.5);
        assert_eq!((x[0], u[0]), (-99.0, 1.0));
        let (mut x, mut u) = (vec![12.0], vec![7.0]);
        reflect_damp(&mut x, &mut u, &b, 0.5);
        assert_eq!((x[0], u[0]), (12.0, 7.0));
    }

    #[test]
    fn reflect_far_overshoot_settles_in_box() {
        let b = Bounds::uniform(1, 0.0, 1.0).unwrap();
        let (mut x, mut u) = (vec![7.3], vec![9.0]);
        reflect_damp(&mut x, &mut u, &b, 0.5);
        assert!(b.contains(&x));
        assert!(u[0].abs() < 9.0);
    }

    #[test]
    fn group_coefficient_ranges() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let c = Coefficients::sample_group(&mut rng);
            assert!((0.15..=0.45).contains(&c.a));
            assert!((0.15..=0.45).contains(&c.g));
            assert!((0.90..=1.50).contains(&c.rt));
            assert!((0.10..=0.50).contains(&c.c));
        }
        let x = Coefficients::sample_group(&mut rng);
        let y = Coefficients::sample_group(&mut rng);
        assert_ne!(x, y);
    }

    #[test]
    fn vmax_tightening() {
        assert_eq!(tighten_vmax(&[40.0, 40.0], 2, 3, 0.25), vec![10.0, 10.0]);
        assert_eq!(tighten_vmax(&[40.0; 3], 3, 3, 0.25), vec![10.0; 3]);
        assert_eq!(tighten_vmax(&[40.0; 30], 30, 3, 0.25), vec![40.0; 30]);
    }

    #[test]
    fn centroid_gravity_cases() {
        let a = [0.0, 0.0];
        let b = [2.0, 0.0];
        let g = centroid_gravity(&[&a, &b], &[2.0, 0.0], 0.5).unwrap();
        assert_abs_diff_eq!(g[0], -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(g[1], 0.0, epsilon = 1e-15);
        assert_eq!(
            centroid_gravity(&[&a, &b], &[1.0, 0.0], 0.5).unwrap(),
            vec![-0.0, -0.0]
        );
        assert_eq!(centroid_gravity(&[&b], &b, 0.3).unwrap(), vec![-0.0, -0.0]);
        assert!(centroid_gravity(&[], &b, 0.3).is_err());
    }

    #[test]
    fn restart_sigma_endpoint() {
        let b = Bounds::new(vec![-100.0, 0.0], vec![100.0, 1.0]).unwrap();
        let s = restart_sigma(&b, 500, 500, 0.1, 0.01);
        assert_abs_diff_eq!(s[0], 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s[1], 0.01, epsilon = 1e-12);
        let s0 = restart_sigma(&b, 0, 500, 0.1, 0.01);
        assert_abs_diff_eq!(s0[0], 20.0, epsilon = 1e-12);
    }

    #[test]
    fn restart_count_ceiling() {
        assert_eq!(restart_count(6, 0.1), 1);
        assert_eq!(restart_count(7, 0.1), 1);
        assert_eq!(restart_count(170, 0.1), 17);
        assert_eq!(restart_count(11, 0.1), 2);
        assert_eq!(restart_count(30, 0.1), 3);
        assert_eq!(restart_count(70, 0.1), 7);
    }

    #[test]
    fn permutation_is_bijection() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut p = random_permutation(30, &mut rng);
        p.sort_unstable();
        assert_eq!(p, (0..30).collect::<Vec<_>>());
    }

    #[test]
    fn unit_frame_move_matches_sum_and_snaps_to_centre() {
        let bounds = Bounds::new(vec![-100.0, 0.0], vec![100.0, 10.0]).unwrap();
        let mut x = vec![12.5, 3.0];
        move_in_unit_frame(&mut x, &[-2.25, 0.5], &bounds);
        assert_abs_diff_eq!(x[0], 10.25, epsilon = 1e-12);
        assert_abs_diff_eq!(x[1], 3.5, epsilon = 1e-12);
        let mut x = vec![1e-70, 5.0 + 1e-30];
        move_in_unit_frame(&mut x, &[3e-71, -1e-31], &bounds);
        assert_eq!(x, vec![0.0, 5.0]);
    }
}
