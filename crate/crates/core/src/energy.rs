//! Centroid shift and the 1-mean energy `E(v) = |v - avg(v) 1|^2`.
//!
//! `E(v)` is the minimum 1-mean clustering cost of the coordinates of `v`.
//! Moving a coordinate further from the mean, on the side it already sits,
//! strictly increases it; [`energy_push`] checks that on concrete inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closed_form::ExactScalar;
use crate::error::{Error, Result};
use crate::geometry::Vector;

/// Relative gap required before `E(u) > E(v)` is reported as a strict increase.
pub const STRICT_GAP: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct EnergyReport {
    /// `avg(v)`.
    pub mean: f64,
    /// `v - avg(v) 1`.
    pub centered: Vector,
    /// `|centered|^2`.
    pub energy: f64,
}

/// Outcome of moving one coordinate away from the mean.
#[derive(Debug, Clone, PartialEq)]
pub struct PushOutcome {
    pub before: EnergyReport,
    pub after: EnergyReport,
    /// `E(after) - E(before) > STRICT_GAP * max(1, E(before))`.
    pub increased: bool,
}

pub fn center_vector(v: &Vector) -> EnergyReport {
    let mean = v.sum() / v.dim() as f64;
    let coords: Vec<f64> = v.coords().iter().map(|x| x - mean).collect();
    let energy = coords.iter().map(|x| x * x).sum();
    EnergyReport {
        mean,
        // differences of finite values stay finite
        centered: Vector::new(coords).expect("finite centered coordinates"),
        energy,
    }
}

/// Convenience wrapper for `center_vector(v).energy`.
pub fn energy(v: &Vector) -> f64 {
    center_vector(v).energy
}

fn check_push(value: f64, new_value: f64, mean: f64) -> Result<()> {
    let upward = new_value > value && value >= mean;
    let downward = new_value < value && value < mean;
    if upward || downward {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "need new > v_i >= avg or new < v_i < avg; got v_i = {value}, new = {new_value}, avg = {mean}"
        )))
    }
}

/// Replaces coordinate `i` of `v` by `new_value` and compares energies.
///
/// Only the two cases `new_value > v_i >= avg(v)` and
/// `new_value < v_i < avg(v)` are accepted; anything else is a
/// [`Error::Precondition`].
pub fn energy_push(v: &Vector, i: usize, new_value: f64) -> Result<PushOutcome> {
    let dim = v.dim();
    if i >= dim {
        return Err(Error::IndexOutOfRange { index: i, dim });
    }
    if !new_value.is_finite() {
        return Err(Error::NonFinite { index: i });
    }
    let before = center_vector(v);
    check_push(v.coords()[i], new_value, before.mean)?;

    let mut coords = v.coords().to_vec();
    coords[i] = new_value;
    let after = center_vector(&Vector::new(coords)?);
    let increased = after.energy - before.energy > STRICT_GAP * before.energy.max(1.0);
    Ok(PushOutcome {
        before,
        after,
        increased,
    })
}

/// Exact energy of a rational vector.
pub fn energy_exact(values: &[ExactScalar]) -> Result<ExactScalar> {
    if values.is_empty() {
        return Err(Error::EmptyVector);
    }
    let len = ExactScalar::from_integer(values.len() as u64);
    let mean = values.iter().fold(ExactScalar::zero(), |acc, x| &acc + x) / len;
    Ok(values.iter().fold(ExactScalar::zero(), |acc, x| {
        let d = x - &mean;
        &acc + &(&d * &d)
    }))
}

/// Rational counterpart of [`energy_push`]: returns `(E(v), E(u))`, and
/// `E(u) > E(v)` is decided exactly.
pub fn energy_push_exact(
    values: &[ExactScalar],
    i: usize,
    new_value: ExactScalar,
) -> Result<(ExactScalar, ExactScalar, bool)> {
    let dim = values.len();
    if i >= dim {
        return Err(Error::IndexOutOfRange { index: i, dim });
    }
    let len = ExactScalar::from_integer(dim as u64);
    let mean = values.iter().fold(ExactScalar::zero(), |acc, x| &acc + x) / len;
    let value = &values[i];
    let upward = &new_value > value && value >= &mean;
    let downward = &new_value < value && value < &mean;
    if !(upward || downward) {
        return Err(Error::Precondition(format!(
            "need new > v_i >= avg or new < v_i < avg; got v_i = {value}, new = {new_value}, avg = {mean}"
        )));
    }
    let before = energy_exact(values)?;
    let mut moved = values.to_vec();
    moved[i] = new_value;
    let after = energy_exact(&moved)?;
    let increased = after > before;
    Ok((before, after, increased))
}

/// Sets coordinate `i` to `alpha` where `z_i < 0` and to `beta` where `z_i >= 0`.
pub fn clamp_to_extremes(z: &Vector, alpha: f64, beta: f64) -> Result<Vector> {
    Vector::new(
        z.coords()
            .iter()
            .map(|&x| if x < 0.0 { alpha } else { beta })
            .collect(),
    )
}

/// Clamp of `z` to its own minimum and maximum coordinates.
pub fn clamp_to_own_extremes(z: &Vector) -> Vector {
    let (lo, hi) = min_max(z.coords());
    clamp_to_extremes(z, lo, hi).expect("extremes of finite coordinates are finite")
}

/// Summary of a randomized check of [`energy_push`].
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzReport {
    pub instances: usize,
    pub upward: usize,
    pub downward: usize,
    pub violations: usize,
    /// Smallest `(E(u) - E(v)) / max(1, E(v))` observed.
    pub min_relative_gap: f64,
}

/// Draws `instances` seeded cases satisfying the push hypothesis and counts
/// those where the energy does not strictly increase.
///
/// Dimension is uniform on `2..=50` and coordinates uniform on `[-10, 10]`.
/// The moved coordinate is pushed away from the mean by an offset uniform on
/// `[1e-3, 10]`.
pub fn fuzz_energy_claim(seed: u64, instances: usize) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = FuzzReport {
        instances,
        upward: 0,
        downward: 0,
        violations: 0,
        min_relative_gap: f64::INFINITY,
    };
    for _ in 0..instances {
        let dim = rng.random_range(2..=50usize);
        let coords: Vec<f64> = (0..dim).map(|_| rng.random_range(-10.0..=10.0)).collect();
        let i = rng.random_range(0..dim);
        let offset = rng.random_range(1e-3..=10.0);
        let v = Vector::new(coords).expect("finite samples");
        let mean = v.sum() / dim as f64;
        let value = v.coords()[i];
        let new_value = if value >= mean {
            report.upward += 1;
            value + offset
        } else {
            report.downward += 1;
            value - offset
        };
        match energy_push(&v, i, new_value) {
            Ok(out) => {
                let gap = (out.after.energy - out.before.energy) / out.before.energy.max(1.0);
                report.min_relative_gap = report.min_relative_gap.min(gap);
                if !out.increased {
                    report.violations += 1;
                }
            }
            Err(_) => report.violations += 1,
        }
    }
    report
}

pub(crate) fn min_max(xs: &[f64]) -> (f64, f64) {
    xs.iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
            (lo.min(x), hi.max(x))
        })
}
