//! Numerical width minimization and brute-force oracles.
//!
//! [`minimize_width`] runs projected subgradient descent on
//! `f(u) = max_p <u, p> - min_p <u, p>` over the unit sphere, optionally
//! intersected with the sum-zero subspace, from a batch of seeded random
//! starts. The result is always an upper bound on the true width.
//!
//! [`grid_width_oracle`] evaluates `f` on a dense angular grid when the search
//! sphere is at most two-dimensional, and [`two_value_enumeration_width`]
//! minimizes over the two-value families of `D_n` in exact arithmetic.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::closed_form::{check_n, width_for_t, ExactScalar};
use crate::directions::make_two_value_direction;
use crate::energy::clamp_to_own_extremes;
use crate::error::{Error, Result};
use crate::geometry::{dot, projection_width, Direction, PointSet, Vector};

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizerConfig {
    pub restarts: usize,
    pub max_iters: usize,
    /// Step at iteration `k` is `step_init / sqrt(k)`.
    pub step_init: f64,
    pub tol: f64,
    pub seed: u64,
    /// Restrict the search to directions orthogonal to `1`.
    pub constrain_sum_zero: bool,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            restarts: 64,
            max_iters: 10_000,
            step_init: 1.0,
            tol: 1e-10,
            seed: 0,
            constrain_sum_zero: true,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::InvalidConfig("restarts must be >= 1".into()));
        }
        if self.max_iters == 0 {
            return Err(Error::InvalidConfig("max_iters must be >= 1".into()));
        }
        if !(self.step_init > 0.0 && self.step_init.is_finite()) {
            return Err(Error::InvalidConfig("step_init must be positive".into()));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidConfig("tol must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Subgradient,
    Grid,
    Enumeration,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Subgradient => "subgradient",
            Method::Grid => "grid",
            Method::Enumeration => "enumeration",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WidthResult {
    /// `projection_width(direction, P)`.
    pub width: f64,
    pub direction: Direction,
    /// Subgradient steps of the winning restart, grid points evaluated, or
    /// `t` values enumerated.
    pub iterations: usize,
    pub restarts_used: usize,
    pub converged: bool,
    pub method: Method,
    /// Exact squared width when the method produces one.
    pub exact_width_squared: Option<ExactScalar>,
}

/// `f(u)` together with the lowest-index maximizer and minimizer of `<u, p>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremes {
    pub width: f64,
    pub argmax: usize,
    pub argmin: usize,
}

/// Evaluates the objective at `u` (`u.len() == points.dim()` is assumed).
pub fn extremes(u: &[f64], points: &PointSet) -> Extremes {
    let mut argmax = 0;
    let mut argmin = 0;
    let first = dot(u, points.points()[0].coords());
    let (mut hi, mut lo) = (first, first);
    for (i, p) in points.iter().enumerate().skip(1) {
        let x = dot(u, p.coords());
        if x > hi {
            hi = x;
            argmax = i;
        }
        if x < lo {
            lo = x;
            argmin = i;
        }
    }
    Extremes {
        width: hi - lo,
        argmax,
        argmin,
    }
}

/// Generator for restart `index`: the run seed selects the key and the
/// restart index selects the stream, so restarts are independent of
/// scheduling order.
pub fn restart_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn project_sum_zero(v: &mut [f64]) {
    let mean = v.iter().sum::<f64>() / v.len() as f64;
    v.iter_mut().for_each(|x| *x -= mean);
}

fn normalize(v: &mut [f64]) -> f64 {
    let norm = dot(v, v).sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
    norm
}

fn random_start(rng: &mut ChaCha8Rng, dim: usize, sum_zero: bool) -> Vec<f64> {
    loop {
        let mut v: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        if sum_zero {
            project_sum_zero(&mut v);
        }
        if normalize(&mut v) > 1e-8 {
            return v;
        }
    }
}

fn wrap_direction(coords: Vec<f64>, sum_zero: bool) -> Result<Direction> {
    let v = Vector::new(coords)?;
    if sum_zero {
        Direction::new_sum_zero(v)
    } else {
        Direction::new(v)
    }
}

struct RestartOutcome {
    width: f64,
    coords: Vec<f64>,
    iterations: usize,
    converged: bool,
}

fn run_restart<F>(
    points: &PointSet,
    cfg: &OptimizerConfig,
    index: usize,
    observe: &mut F,
) -> RestartOutcome
where
    F: FnMut(&[f64], f64),
{
    let dim = points.dim();
    let sum_zero = cfg.constrain_sum_zero;
    let mut rng = restart_rng(cfg.seed, index);
    let mut u = random_start(&mut rng, dim, sum_zero);
    let mut ext = extremes(&u, points);
    observe(&u, ext.width);

    let mut best_width = ext.width;
    let mut best = u.clone();
    let mut iterations = 0;
    let mut last_improvement = f64::INFINITY;
    let mut stationary = false;
    let mut g = vec![0.0; dim];

    for k in 1..=cfg.max_iters {
        let hi = points.points()[ext.argmax].coords();
        let lo = points.points()[ext.argmin].coords();
        for (gi, (a, b)) in g.iter_mut().zip(hi.iter().zip(lo)) {
            *gi = a - b;
        }
        if sum_zero {
            project_sum_zero(&mut g);
        }
        let radial = dot(&g, &u);
        g.iter_mut().zip(&u).for_each(|(gi, ui)| *gi -= radial * ui);
        if dot(&g, &g).sqrt() <= cfg.tol {
            stationary = true;
            break;
        }

        let step = cfg.step_init / (k as f64).sqrt();
        u.iter_mut().zip(&g).for_each(|(ui, gi)| *ui -= step * gi);
        if sum_zero {
            project_sum_zero(&mut u);
        }
        normalize(&mut u);
        iterations = k;

        ext = extremes(&u, points);
        observe(&u, ext.width);
        let previous = best_width;
        if ext.width < best_width {
            best_width = ext.width;
            best.copy_from_slice(&u);
        }
        last_improvement = previous - best_width;
    }

    if sum_zero {
        // Snap to the two-value direction sharing the sign pattern of the best
        // iterate; keep it only if the width does not go up.
        let clamped = clamp_to_own_extremes(&Vector::new(best.clone()).expect("finite iterate"));
        let mut snapped = clamped.into_coords();
        project_sum_zero(&mut snapped);
        if normalize(&mut snapped) > 0.0 {
            let w = extremes(&snapped, points).width;
            if w <= best_width {
                best_width = w;
                best = snapped;
            }
        }
    }

    RestartOutcome {
        width: best_width,
        coords: best,
        iterations,
        converged: stationary || last_improvement < cfg.tol,
    }
}

fn check_problem(points: &PointSet, cfg: &OptimizerConfig) -> Result<()> {
    cfg.validate()?;
    if cfg.constrain_sum_zero && points.dim() < 2 {
        return Err(Error::EmptyConstraintSpace);
    }
    Ok(())
}

fn finish(
    points: &PointSet,
    cfg: &OptimizerConfig,
    outcomes: Vec<RestartOutcome>,
) -> Result<WidthResult> {
    // min by width, ties to the lowest restart index
    let best = outcomes
        .into_iter()
        .reduce(|a, b| if b.width < a.width { b } else { a })
        .expect("at least one restart");
    let direction = wrap_direction(best.coords, cfg.constrain_sum_zero)?;
    let width = projection_width(&direction, points)?;
    Ok(WidthResult {
        width,
        direction,
        iterations: best.iterations,
        restarts_used: cfg.restarts,
        converged: best.converged,
        method: Method::Subgradient,
        exact_width_squared: None,
    })
}

/// Best-of-restarts projected subgradient descent. Restarts run in parallel;
/// the result depends only on `(points, cfg)`.
pub fn minimize_width(points: &PointSet, cfg: &OptimizerConfig) -> Result<WidthResult> {
    check_problem(points, cfg)?;
    let outcomes: Vec<RestartOutcome> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| run_restart(points, cfg, r, &mut |_, _| {}))
        .collect();
    finish(points, cfg, outcomes)
}

/// Sequential variant of [`minimize_width`] that reports every iterate and
/// its objective value to `observe`. Produces the same result.
pub fn minimize_width_observed<F>(
    points: &PointSet,
    cfg: &OptimizerConfig,
    mut observe: F,
) -> Result<WidthResult>
where
    F: FnMut(&[f64], f64),
{
    check_problem(points, cfg)?;
    let outcomes = (0..cfg.restarts)
        .map(|r| run_restart(points, cfg, r, &mut observe))
        .collect();
    finish(points, cfg, outcomes)
}

/// Orthonormal basis of `{x in R^dim : <x, 1> = 0}`:
/// `b_k = (1, ..., 1, -k, 0, ..., 0) / sqrt(k(k+1))`, `k = 1..dim-1`.
pub fn sum_zero_basis(dim: usize) -> Vec<Vec<f64>> {
    (1..dim)
        .map(|k| {
            let s = 1.0 / ((k * (k + 1)) as f64).sqrt();
            let mut b = vec![0.0; dim];
            b[..k].iter_mut().for_each(|x| *x = s);
            b[k] = -(k as f64) * s;
            b
        })
        .collect()
}

fn search_basis(points: &PointSet, sum_zero: bool) -> Result<Vec<Vec<f64>>> {
    let dim = points.dim();
    let basis = if sum_zero {
        if dim < 2 {
            return Err(Error::EmptyConstraintSpace);
        }
        sum_zero_basis(dim)
    } else {
        (0..dim)
            .map(|i| {
                let mut e = vec![0.0; dim];
                e[i] = 1.0;
                e
            })
            .collect()
    };
    if basis.len() > 3 {
        return Err(Error::OracleScope(basis.len()));
    }
    Ok(basis)
}

/// Visits every grid direction in basis coordinates with its width.
fn scan_grid<F>(
    points: &PointSet,
    resolution: usize,
    sum_zero: bool,
    mut visit: F,
) -> Result<(Vec<Vec<f64>>, usize)>
where
    F: FnMut(&[f64], f64),
{
    if resolution < 8 {
        return Err(Error::GridResolution(resolution));
    }
    let basis = search_basis(points, sum_zero)?;
    let m = basis.len();
    let projected: Vec<Vec<f64>> = points
        .iter()
        .map(|p| basis.iter().map(|b| dot(b, p.coords())).collect())
        .collect();
    let width_of = |w: &[f64]| {
        let (lo, hi) = projected
            .iter()
            .map(|q| dot(w, q))
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
                (lo.min(x), hi.max(x))
            });
        hi - lo
    };

    let tau = std::f64::consts::TAU;
    let pi = std::f64::consts::PI;
    let mut evaluated = 0;
    match m {
        1 => {
            visit(&[1.0], width_of(&[1.0]));
            evaluated = 1;
        }
        2 => {
            for j in 0..resolution {
                let theta = tau * j as f64 / resolution as f64;
                let w = [theta.cos(), theta.sin()];
                visit(&w, width_of(&w));
                evaluated += 1;
            }
        }
        _ => {
            for i in 0..=resolution {
                let theta = pi * i as f64 / resolution as f64;
                let (st, ct) = theta.sin_cos();
                // the poles need a single azimuth
                let azimuths = if i == 0 || i == resolution {
                    1
                } else {
                    resolution
                };
                for j in 0..azimuths {
                    let phi = tau * j as f64 / resolution as f64;
                    let (sp, cp) = phi.sin_cos();
                    let w = [st * cp, st * sp, ct];
                    visit(&w, width_of(&w));
                    evaluated += 1;
                }
            }
        }
    }
    Ok((basis, evaluated))
}

fn to_ambient(basis: &[Vec<f64>], w: &[f64], sum_zero: bool) -> Result<Direction> {
    let dim = basis[0].len();
    let mut u = vec![0.0; dim];
    for (b, wi) in basis.iter().zip(w) {
        u.iter_mut().zip(b).for_each(|(ui, bi)| *ui += wi * bi);
    }
    if sum_zero {
        project_sum_zero(&mut u);
    }
    normalize(&mut u);
    wrap_direction(u, sum_zero)
}

/// Minimum of the projection width over a uniform angular grid of the search
/// sphere (the unit sphere of `R^dim`, or of the sum-zero subspace when
/// `constrain_sum_zero`), which must be at most two-dimensional.
///
/// A circle is sampled at `resolution` equally spaced angles; a 2-sphere at
/// `resolution` polar by `resolution` azimuthal subdivisions.
pub fn grid_width_oracle(
    points: &PointSet,
    resolution: usize,
    constrain_sum_zero: bool,
) -> Result<WidthResult> {
    let mut best_w = f64::INFINITY;
    let mut best = Vec::new();
    let (basis, evaluated) = scan_grid(points, resolution, constrain_sum_zero, |w, width| {
        if width < best_w {
            best_w = width;
            best = w.to_vec();
        }
    })?;
    let direction = to_ambient(&basis, &best, constrain_sum_zero)?;
    let width = projection_width(&direction, points)?;
    Ok(WidthResult {
        width,
        direction,
        iterations: evaluated,
        restarts_used: 1,
        converged: true,
        method: Method::Grid,
        exact_width_squared: None,
    })
}

/// All grid directions whose width is within `slack` of the grid minimum,
/// with their widths, in scan order.
pub fn grid_near_minimizers(
    points: &PointSet,
    resolution: usize,
    constrain_sum_zero: bool,
    slack: f64,
) -> Result<Vec<(Direction, f64)>> {
    let mut min = f64::INFINITY;
    scan_grid(points, resolution, constrain_sum_zero, |_, width| {
        min = min.min(width)
    })?;
    let mut near = Vec::new();
    let (basis, _) = scan_grid(points, resolution, constrain_sum_zero, |w, width| {
        if width <= min + slack {
            near.push((w.to_vec(), width));
        }
    })?;
    near.into_iter()
        .map(|(w, width)| Ok((to_ambient(&basis, &w, constrain_sum_zero)?, width)))
        .collect()
}

/// Exact minimum of `width_for_t(n, t)` over `t = 1..=n`, with the witness
/// direction whose low set is `{0, ..., t-1}` for the smallest minimizing `t`.
pub fn two_value_enumeration_width(n: usize) -> Result<WidthResult> {
    check_n(n)?;
    let mut best_t = 1;
    let mut best = width_for_t(n, 1)?;
    for t in 2..=n {
        let w = width_for_t(n, t)?;
        if w < best {
            best = w;
            best_t = t;
        }
    }
    let low: Vec<usize> = (0..best_t).collect();
    let witness = make_two_value_direction(n, best_t, &low)?;
    Ok(WidthResult {
        width: best.sqrt_f64(),
        direction: witness.direction,
        iterations: n,
        restarts_used: 1,
        converged: true,
        method: Method::Enumeration,
        exact_width_squared: Some(best),
    })
}
