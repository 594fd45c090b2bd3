//! Optimizer behaviour against closed forms and independent oracles.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use simplexwidth::closed_form::{width_squared, SimplexKind};
use simplexwidth::directions::{enumerate_optimal_directions, is_optimal_direction};
use simplexwidth::geometry::{
    projection_width, standard_simplex_vertices, Direction, PointSet, Vector,
};
use simplexwidth::optimizer::{
    grid_width_oracle, minimize_width, minimize_width_observed, OptimizerConfig,
};

fn closed(n: usize) -> f64 {
    width_squared(n, SimplexKind::Standard).unwrap().sqrt_f64()
}

#[test]
fn never_beats_the_closed_form() {
    for seed in 0..4 {
        for n in 1..=9 {
            let cfg = OptimizerConfig {
                restarts: 8,
                max_iters: 2000,
                seed,
                ..OptimizerConfig::default()
            };
            let r = minimize_width(&standard_simplex_vertices(n).unwrap(), &cfg).unwrap();
            assert!(
                r.width >= closed(n) - 1e-9,
                "n={n} seed={seed} width={}",
                r.width
            );
        }
    }
}

#[test]
fn deterministic_for_fixed_seed() {
    let pts = standard_simplex_vertices(6).unwrap();
    let cfg = OptimizerConfig {
        restarts: 16,
        seed: 11,
        ..OptimizerConfig::default()
    };
    let a = minimize_width(&pts, &cfg).unwrap();
    let b = minimize_width(&pts, &cfg).unwrap();
    assert_eq!(a, b);
    let c = minimize_width_observed(&pts, &cfg, |_, _| {}).unwrap();
    assert_eq!(a, c);
}

#[test]
fn observed_iterates_report_true_objective() {
    let pts = standard_simplex_vertices(5).unwrap();
    let cfg = OptimizerConfig {
        restarts: 2,
        max_iters: 500,
        seed: 3,
        ..OptimizerConfig::default()
    };
    let mut seen = Vec::new();
    minimize_width_observed(&pts, &cfg, |u, f| {
        if seen.len() < 100 {
            seen.push((u.to_vec(), f));
        }
    })
    .unwrap();
    assert_eq!(seen.len(), 100);
    for (u, f) in seen {
        let v = Vector::new(u).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-12);
        assert!(v.sum().abs() < 1e-12);
        let d = Direction::new(v).unwrap();
        assert!((projection_width(&d, &pts).unwrap() - f).abs() < 1e-12);
    }
}

#[test]
fn unconstrained_search_on_a_segment() {
    // two points at distance 2: the width vanishes orthogonally to the segment
    let pts = PointSet::from_rows(vec![vec![1.0, 0.0], vec![-1.0, 0.0]]).unwrap();
    let cfg = OptimizerConfig {
        constrain_sum_zero: false,
        restarts: 8,
        ..OptimizerConfig::default()
    };
    let r = minimize_width(&pts, &cfg).unwrap();
    assert!(r.width < 1e-6, "width {}", r.width);
}

#[test]
fn grid_and_optimizer_agree_in_low_dimension() {
    for (n, res, tol) in [(2usize, 20_000usize, 1e-6), (3, 600, 1e-2)] {
        let pts = standard_simplex_vertices(n).unwrap();
        let grid = grid_width_oracle(&pts, res, true).unwrap();
        let opt = minimize_width(&pts, &OptimizerConfig::default()).unwrap();
        assert!(opt.width <= grid.width + 1e-12, "n={n}");
        assert!(
            grid.width - opt.width <= tol,
            "n={n}: {} vs {}",
            grid.width,
            opt.width
        );
    }
}

/// Plain projected subgradient descent with no polishing, written
/// independently of the library optimizer.
fn plain_descent(n: usize, start: &[f64], iters: usize) -> (f64, Vec<f64>) {
    let dim = n + 1;
    let project = |x: &mut Vec<f64>| {
        let mean = x.iter().sum::<f64>() / dim as f64;
        x.iter_mut().for_each(|c| *c -= mean);
        let norm = x.iter().map(|c| c * c).sum::<f64>().sqrt();
        x.iter_mut().for_each(|c| *c /= norm);
    };
    // vertices are e_i, so the projected extent is max(u) - min(u)
    let spread = |x: &[f64]| {
        let hi = x.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let lo = x.iter().cloned().fold(f64::INFINITY, f64::min);
        hi - lo
    };
    let mut u = start.to_vec();
    project(&mut u);
    let mut best = (spread(&u), u.clone());
    for k in 1..=iters {
        let imax = (0..dim).fold(0, |a, i| if u[i] > u[a] { i } else { a });
        let imin = (0..dim).fold(0, |a, i| if u[i] < u[a] { i } else { a });
        let step = 0.3 / (k as f64).sqrt();
        u[imax] -= step;
        u[imin] += step;
        project(&mut u);
        let f = spread(&u);
        if f < best.0 {
            best = (f, u.clone());
        }
    }
    best
}

fn distance_to_family(u: &[f64], family: &[Direction]) -> f64 {
    family
        .iter()
        .map(|d| {
            d.coords()
                .iter()
                .zip(u)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
        .fold(f64::INFINITY, f64::min)
}

#[test]
fn odd_minimizers_are_only_the_balanced_directions() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [1usize, 3, 5, 7] {
        let target = closed(n);
        let family = enumerate_optimal_directions(n).unwrap();
        for _ in 0..200 {
            let start: Vec<f64> = (0..=n).map(|_| rng.random_range(-1.0..1.0)).collect();
            let (w, u) = plain_descent(n, &start, 20_000);
            assert!(w >= target - 1e-12);
            let far = distance_to_family(&u, &family);
            if w - target < 1e-2 {
                assert!(
                    far < 0.01,
                    "n={n}: near-optimal point {far} away from the family"
                );
                let d = Direction::normalize_sum_zero(&Vector::new(u).unwrap()).unwrap();
                if w - target < 1e-6 {
                    assert!(distance_to_family(d.coords(), &family) < 1e-3);
                }
            }
            if far > 0.05 {
                assert!(
                    w - target > 1e-2,
                    "n={n}: width gap {} at distance {far}",
                    w - target
                );
            }
        }
        assert!(is_optimal_direction(n, &family[0]).unwrap());
    }
}
