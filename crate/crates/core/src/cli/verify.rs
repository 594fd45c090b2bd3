//! The `verify` battery: exact identities, oracles and numerical cross-checks.

use num_integer::binomial;

use crate::closed_form::{
    alpha_beta, alpha_beta_squared, center, circumdistance_squared, circumradius_squared,
    indistance_squared, inradius_squared, optimal_t_values, width_for_t, width_squared,
    ExactScalar, SimplexKind,
};
use crate::directions::{enumerate_optimal_directions, is_optimal_direction};
use crate::energy::fuzz_energy_claim;
use crate::error::Result;
use crate::geometry::{projection_width, standard_simplex_vertices, Vector};
use crate::optimizer::{
    grid_near_minimizers, grid_width_oracle, minimize_width, two_value_enumeration_width,
    OptimizerConfig,
};

/// Largest `n` accepted by `verify`.
pub const VERIFY_MAX_N: usize = 64;
const RADII_MAX_N: usize = 32;
const DIRECTIONS_MAX_N: usize = 11;
const OPTIMIZER_MAX_N: usize = 12;
const ENERGY_INSTANCES: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &'static str, failures: Vec<String>, ok_detail: String) -> CheckOutcome {
    match failures.first() {
        None => CheckOutcome {
            name,
            passed: true,
            detail: ok_detail,
        },
        Some(first) => CheckOutcome {
            name,
            passed: false,
            detail: format!("{} failure(s); first: {first}", failures.len()),
        },
    }
}

fn standard_formula(n: usize) -> ExactScalar {
    let m = n as i64;
    if n % 2 == 1 {
        ExactScalar::new(4, m + 1)
    } else {
        ExactScalar::new(4 * (m + 1), m * (m + 2))
    }
}

fn exact_width_identity(max_n: usize) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let expect = standard_formula(n);
        let closed = width_squared(n, SimplexKind::Standard)?;
        let enumerated = two_value_enumeration_width(n)?.exact_width_squared;
        if closed != expect {
            failures.push(format!("n={n}: closed form {closed} != {expect}"));
        }
        if enumerated.as_ref() != Some(&expect) {
            failures.push(format!("n={n}: enumeration {enumerated:?} != {expect}"));
        }
    }
    Ok(outcome(
        "exact-width-identity",
        failures,
        format!("n = 1..{max_n}"),
    ))
}

fn corollary_rescaling(max_n: usize) -> Result<CheckOutcome> {
    let half = ExactScalar::new(1, 2);
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let reg = width_squared(n, SimplexKind::Regular)?;
        let std = width_squared(n, SimplexKind::Standard)?;
        if reg != &std * &half {
            failures.push(format!("n={n}: {reg} != {std}/2"));
        }
    }
    let spots = [(3usize, "0.707106781187"), (2, "0.866025403784")];
    for (n, expect) in spots {
        let got = super::format_decimal(width_squared(n, SimplexKind::Regular)?.sqrt_f64());
        if got != expect {
            failures.push(format!("n={n}: rendered {got} != {expect}"));
        }
    }
    Ok(outcome(
        "corollary-rescaling",
        failures,
        format!("n = 1..{max_n}"),
    ))
}

fn radii(max_n: usize) -> Result<CheckOutcome> {
    let top = max_n.min(RADII_MAX_N);
    let half = ExactScalar::new(1, 2);
    let mut failures = Vec::new();
    for n in 1..=top {
        let dim = n + 1;
        let c = center(n)?;
        let circ = circumdistance_squared(n)?.to_f64();
        let ins = indistance_squared(n)?.to_f64();
        for i in 0..dim {
            let d2 = c.sub(&Vector::basis(dim, i)?)?.norm_squared();
            if (d2 - circ).abs() > 1e-14 {
                failures.push(format!("n={n}: |c - e_{i}|^2 = {d2}"));
            }
            let facet: Vec<f64> = (0..dim)
                .map(|j| if j == i { 0.0 } else { 1.0 / n as f64 })
                .collect();
            let f2 = c.sub(&Vector::new(facet)?)?.norm_squared();
            if (f2 - ins).abs() > 1e-14 {
                failures.push(format!("n={n}: facet {i} distance^2 = {f2}"));
            }
        }
        if inradius_squared(n)? != &indistance_squared(n)? * &half
            || circumradius_squared(n)? != &circumdistance_squared(n)? * &half
        {
            failures.push(format!("n={n}: radii are not half of the D_n values"));
        }
    }
    Ok(outcome("radii", failures, format!("n = 1..{top}")))
}

fn sanity_identity(max_n: usize) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    for n in 1..=max_n {
        for t in 1..=n {
            let (a2, b2) = alpha_beta_squared(n, t)?;
            let lhs = &(&ExactScalar::from_integer(t as u64) * &a2)
                + &(&ExactScalar::from_integer((n + 1 - t) as u64) * &b2);
            if lhs != ExactScalar::one() {
                failures.push(format!("n={n} t={t}: exact sum {lhs}"));
            }
            let (a, b) = alpha_beta(n, t)?;
            let f = t as f64 * a * a + (n + 1 - t) as f64 * b * b;
            if (f - 1.0).abs() > 1e-14 {
                failures.push(format!("n={n} t={t}: float sum {f}"));
            }
        }
    }
    Ok(outcome(
        "sanity-identity",
        failures,
        format!("n = 1..{max_n}, all t"),
    ))
}

fn t_optimality(max_n: usize) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    for n in 1..=max_n {
        let values: Vec<ExactScalar> = (1..=n).map(|t| width_for_t(n, t)).collect::<Result<_>>()?;
        let min = values.iter().min().expect("n >= 1");
        let argmin: Vec<usize> = (1..=n).filter(|&t| &values[t - 1] == min).collect();
        if argmin != optimal_t_values(n)? {
            failures.push(format!("n={n}: argmin {argmin:?}"));
        }
        if *min != width_squared(n, SimplexKind::Standard)? {
            failures.push(format!("n={n}: min {min}"));
        }
    }
    Ok(outcome("t-optimality", failures, format!("n = 1..{max_n}")))
}

fn monotone_decrease(max_n: usize) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    for n in 2..=max_n {
        let prev = width_squared(n - 1, SimplexKind::Regular)?;
        let cur = width_squared(n, SimplexKind::Regular)?;
        if cur >= prev {
            failures.push(format!("n={n}: {cur} >= {prev}"));
        }
    }
    Ok(outcome(
        "monotone-decrease",
        failures,
        format!("n = 1..{max_n}"),
    ))
}

fn direction_families(max_n: usize) -> Result<CheckOutcome> {
    let top = max_n.min(DIRECTIONS_MAX_N);
    let mut failures = Vec::new();
    let mut total = 0;
    for n in 1..=top {
        let dirs = enumerate_optimal_directions(n)?;
        let expected = binomial(n + 1, n.div_ceil(2));
        if dirs.len() != expected {
            failures.push(format!(
                "n={n}: {} directions, expected {expected}",
                dirs.len()
            ));
        }
        let pts = standard_simplex_vertices(n)?;
        let target = width_squared(n, SimplexKind::Standard)?.sqrt_f64();
        for d in &dirs {
            let w = projection_width(d, &pts)?;
            if (w - target).abs() > 1e-12 {
                failures.push(format!("n={n}: width {w} != {target}"));
            }
        }
        total += dirs.len();
    }
    Ok(outcome(
        "direction-families",
        failures,
        format!("n = 1..{top}, {total} directions"),
    ))
}

fn energy_fuzz(seed: u64) -> CheckOutcome {
    let report = fuzz_energy_claim(seed, ENERGY_INSTANCES);
    let failures = if report.violations > 0 {
        vec![format!("{} violations", report.violations)]
    } else {
        Vec::new()
    };
    outcome(
        "energy-fuzz",
        failures,
        format!(
            "{} instances, 0 violations, min relative gap {:.3e}",
            report.instances, report.min_relative_gap
        ),
    )
}

fn optimizer_agreement(max_n: usize, seed: u64) -> Result<CheckOutcome> {
    let top = max_n.min(OPTIMIZER_MAX_N);
    let cfg = OptimizerConfig {
        seed,
        ..OptimizerConfig::default()
    };
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    for n in 1..=top {
        let pts = standard_simplex_vertices(n)?;
        let r = minimize_width(&pts, &cfg)?;
        let target = width_squared(n, SimplexKind::Standard)?.sqrt_f64();
        let rel = (r.width - target) / target;
        worst = worst.max(rel.abs());
        if rel.abs() > 1e-6 || rel < -1e-9 {
            failures.push(format!("n={n}: width {} vs {target}", r.width));
        }
        if !is_optimal_direction(n, &r.direction)? {
            failures.push(format!("n={n}: direction not in the optimal family"));
        }
    }
    Ok(outcome(
        "optimizer-agreement",
        failures,
        format!("n = 1..{top}, worst relative error {worst:.3e}"),
    ))
}

fn grid_oracle(max_n: usize) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    if max_n >= 2 {
        let d2 = standard_simplex_vertices(2)?;
        let r = grid_width_oracle(&d2, 100_000, true)?;
        let target = 1.5f64.sqrt();
        if (r.width - target).abs() > 1e-3 {
            failures.push(format!("D_2 grid width {}", r.width));
        }
    }
    if max_n >= 3 {
        let d3 = standard_simplex_vertices(3)?;
        let r = grid_width_oracle(&d3, 2000, true)?;
        if (r.width - 1.0).abs() > 2e-3 {
            failures.push(format!("D_3 grid width {}", r.width));
        }
        let h = enumerate_optimal_directions(3)?;
        for (d, _) in grid_near_minimizers(&d3, 2000, true, 1e-2)? {
            let angle = h
                .iter()
                .map(|m| {
                    d.vector()
                        .dot(m.vector())
                        .map(|c| c.clamp(-1.0, 1.0).acos())
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .fold(f64::INFINITY, f64::min);
            if angle > 0.05 {
                failures.push(format!("D_3 near-minimizer {} rad from H", angle));
                break;
            }
        }
    }
    Ok(outcome("grid-oracle", failures, "D_2, D_3".to_string()))
}

/// Runs every check for `1 <= max_n <= 64`. Optimizer checks stop at 12,
/// direction enumeration at 11 and float radii at 32.
pub fn run_checks(max_n: usize, seed: u64) -> Result<Vec<CheckOutcome>> {
    Ok(vec![
        exact_width_identity(max_n)?,
        corollary_rescaling(max_n)?,
        radii(max_n)?,
        sanity_identity(max_n)?,
        t_optimality(max_n)?,
        monotone_decrease(max_n)?,
        direction_families(max_n)?,
        energy_fuzz(seed),
        optimizer_agreement(max_n, seed)?,
        grid_oracle(max_n)?,
    ])
}
