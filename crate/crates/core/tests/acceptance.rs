//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the test
//! fails if any criterion fails.
//!
//! Run with `cargo test -p simplexwidth --test acceptance -- --nocapture`.

use std::process::Command;
use std::time::{Duration, Instant};

use simplexwidth::closed_form::{
    alpha_beta, alpha_beta_squared, center, circumradius_squared, inradius_squared, width_for_t,
    width_squared, ExactScalar, SimplexKind,
};
use simplexwidth::directions::{enumerate_optimal_directions, is_optimal_direction};
use simplexwidth::energy::fuzz_energy_claim;
use simplexwidth::geometry::{projection_width, standard_simplex_vertices, Vector};
use simplexwidth::optimizer::{
    grid_near_minimizers, grid_width_oracle, minimize_width, two_value_enumeration_width,
    OptimizerConfig,
};

const ACCEPTANCE_SEED: u64 = 42;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(p: i64, d: i64) -> ExactScalar {
    ExactScalar::new(p, d)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("runtime {elapsed:?} exceeds {limit:?}")
    })
}

fn choose(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// 1. Exact width identity and the two-value enumeration oracle, n = 1..64.
fn exact_width_identity() -> Outcome {
    let start = Instant::now();
    for n in 1..=64usize {
        let m = n as i64;
        let expect = if n % 2 == 1 {
            q(4, m + 1)
        } else {
            q(4 * (m + 1), m * (m + 2))
        };
        let closed = width_squared(n, SimplexKind::Standard).unwrap();
        ensure(closed == expect, || format!("n={n}: {closed} != {expect}"))?;
        let enumerated = two_value_enumeration_width(n).unwrap().exact_width_squared;
        ensure(enumerated.as_ref() == Some(&expect), || {
            format!("n={n}: enumeration {enumerated:?}")
        })?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("n = 1..64 exact, {:?}", start.elapsed()))
}

/// 2. Regular width is half the standard squared width; printed spot values.
fn corollary_rescaling() -> Outcome {
    let half = q(1, 2);
    for n in 1..=64usize {
        let reg = width_squared(n, SimplexKind::Regular).unwrap();
        let std = width_squared(n, SimplexKind::Standard).unwrap();
        ensure(reg == &std * &half, || format!("n={n}: {reg} vs {std}"))?;
    }

    let out = Command::new(env!("CARGO_BIN_EXE_simplexwidth"))
        .args(["table", "--max-n", "3", "--format", "csv"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("table exited with {}", out.status)
    })?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    let printed = |n: usize| rows[n - 1][4].to_string();

    let expect3 = (2.0f64 / 4.0).sqrt();
    let expect2 = 3f64.sqrt() / 2.0;
    ensure(printed(3) == "0.707106781187", || {
        format!("n=3 printed {}", printed(3))
    })?;
    ensure(printed(2) == "0.866025403784", || {
        format!("n=2 printed {}", printed(2))
    })?;
    // 12 significant digits: half a unit in the 12th place
    for (n, expect) in [(3, expect3), (2, expect2)] {
        let p: f64 = printed(n).parse().map_err(|_| "unparsable".to_string())?;
        ensure((p - expect).abs() <= 0.5e-12, || {
            format!("n={n}: {p} vs {expect}")
        })?;
    }
    Ok("n = 1..64 exact; table prints 0.707106781187 and 0.866025403784".into())
}

/// 3. Center-to-vertex and center-to-facet-centroid distances, n = 1..32.
fn radii() -> Outcome {
    let half = q(1, 2);
    for n in 1..=32usize {
        let pts = standard_simplex_vertices(n).unwrap();
        let c = center(n).unwrap();
        let circ = n as f64 / (n as f64 + 1.0);
        let ins = 1.0 / (n as f64 * (n as f64 + 1.0));
        for (i, v) in pts.iter().enumerate() {
            let d2 = c.sub(v).unwrap().norm_squared();
            ensure((d2 - circ).abs() <= 1e-14, || {
                format!("n={n} vertex {i}: {d2}")
            })?;

            // centroid of the facet opposite vertex i, averaged from the vertices
            let mut centroid = vec![0.0; n + 1];
            for (_, w) in pts.iter().enumerate().filter(|(j, _)| *j != i) {
                for (acc, x) in centroid.iter_mut().zip(w.coords()) {
                    *acc += x;
                }
            }
            centroid.iter_mut().for_each(|x| *x /= n as f64);
            let f2 = c
                .sub(&Vector::new(centroid).unwrap())
                .unwrap()
                .norm_squared();
            ensure((f2 - ins).abs() <= 1e-14, || {
                format!("n={n} facet {i}: {f2}")
            })?;
        }
        let m = n as i64;
        let r2 = inradius_squared(n).unwrap();
        let big_r2 = circumradius_squared(n).unwrap();
        ensure(r2 == q(1, 2 * m * (m + 1)), || format!("n={n}: r^2 = {r2}"))?;
        ensure(big_r2 == q(m, 2 * (m + 1)), || {
            format!("n={n}: R^2 = {big_r2}")
        })?;
        ensure(r2 == &q(1, m * (m + 1)) * &half, || {
            format!("n={n}: r^2 not halved")
        })?;
        ensure(big_r2 == &q(m, m + 1) * &half, || {
            format!("n={n}: R^2 not halved")
        })?;
    }
    Ok("n = 1..32 within 1e-14; radii halve exactly".into())
}

/// 4. Every enumerated optimal direction achieves the closed-form width.
fn direction_families() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for n in 1..=11usize {
        let dirs = enumerate_optimal_directions(n).unwrap();
        let expected = if n % 2 == 1 {
            choose(n as u64 + 1, (n as u64).div_ceil(2))
        } else {
            choose(n as u64 + 1, n as u64 / 2)
        };
        ensure(dirs.len() as u64 == expected, || {
            format!("n={n}: {} directions, expected {expected}", dirs.len())
        })?;
        let pts = standard_simplex_vertices(n).unwrap();
        let target = width_squared(n, SimplexKind::Standard).unwrap().sqrt_f64();
        for d in &dirs {
            let w = projection_width(d, &pts).unwrap();
            ensure((w - target).abs() <= 1e-12, || {
                format!("n={n}: {w} vs {target}")
            })?;
        }
        total += dirs.len();
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!(
        "{total} directions for n = 1..11, {:?}",
        start.elapsed()
    ))
}

/// 5. t alpha^2 + (n+1-t) beta^2 = 1.
fn sanity_identity() -> Outcome {
    let mut cases = 0;
    for n in 1..=64usize {
        for t in 1..=n {
            let (a, b) = alpha_beta(n, t).unwrap();
            let s = t as f64 * a * a + (n + 1 - t) as f64 * b * b;
            ensure((s - 1.0).abs() <= 1e-14, || format!("n={n} t={t}: {s}"))?;
            let (a2, b2) = alpha_beta_squared(n, t).unwrap();
            let exact = &(&ExactScalar::from_integer(t as u64) * &a2)
                + &(&ExactScalar::from_integer((n + 1 - t) as u64) * &b2);
            ensure(exact == ExactScalar::one(), || {
                format!("n={n} t={t}: {exact}")
            })?;
            cases += 1;
        }
    }
    Ok(format!(
        "{cases} (n, t) pairs, float within 1e-14 and exact"
    ))
}

/// 6. Energy strictly increases on 10^4 seeded instances of the hypothesis.
fn energy_fuzz() -> Outcome {
    let report = fuzz_energy_claim(ACCEPTANCE_SEED, 10_000);
    ensure(report.instances == 10_000, || "wrong instance count".into())?;
    ensure(report.violations == 0, || {
        format!("{} violations", report.violations)
    })?;
    Ok(format!(
        "10000 instances ({} up, {} down), 0 violations",
        report.upward, report.downward
    ))
}

/// 7. The optimizer rediscovers the closed form and an optimal direction.
fn optimizer_rediscovery() -> Outcome {
    let start = Instant::now();
    let cfg = OptimizerConfig {
        restarts: 64,
        seed: ACCEPTANCE_SEED,
        constrain_sum_zero: true,
        ..OptimizerConfig::default()
    };
    let mut worst: f64 = 0.0;
    for n in 1..=12usize {
        let pts = standard_simplex_vertices(n).unwrap();
        let r = minimize_width(&pts, &cfg).unwrap();
        let target = width_squared(n, SimplexKind::Standard).unwrap().sqrt_f64();
        let rel = (r.width - target) / target;
        worst = worst.max(rel.abs());
        ensure(rel.abs() <= 1e-6, || {
            format!("n={n}: {} vs {target}", r.width)
        })?;
        ensure(rel >= -1e-9, || {
            format!("n={n}: {} below the closed form", r.width)
        })?;
        ensure(is_optimal_direction(n, &r.direction).unwrap(), || {
            format!("n={n}: direction {:?} rejected", r.direction.coords())
        })?;
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!(
        "n = 1..12, worst relative error {worst:.2e}, {:?}",
        start.elapsed()
    ))
}

/// 8. Dense grid oracle on D_2 and D_3; near-minimizers of D_3 sit next to H.
fn grid_oracle() -> Outcome {
    let d2 = standard_simplex_vertices(2).unwrap();
    let g2 = grid_width_oracle(&d2, 100_000, true).unwrap();
    ensure((g2.width - 1.5f64.sqrt()).abs() <= 1e-3, || {
        format!("D_2 grid {}", g2.width)
    })?;

    let d3 = standard_simplex_vertices(3).unwrap();
    let g3 = grid_width_oracle(&d3, 2000, true).unwrap();
    ensure((g3.width - 1.0).abs() <= 2e-3, || {
        format!("D_3 grid {}", g3.width)
    })?;

    let h = enumerate_optimal_directions(3).unwrap();
    let near = grid_near_minimizers(&d3, 2000, true, 1e-2).unwrap();
    let mut hit = vec![false; h.len()];
    let mut worst: f64 = 0.0;
    for (d, _) in &near {
        let (k, angle) = h
            .iter()
            .map(|m| d.vector().dot(m.vector()).unwrap().clamp(-1.0, 1.0).acos())
            .enumerate()
            .fold(
                (0, f64::INFINITY),
                |acc, (k, a)| if a < acc.1 { (k, a) } else { acc },
            );
        ensure(angle <= 0.05, || {
            format!("near-minimizer {angle} rad from H")
        })?;
        hit[k] = true;
        worst = worst.max(angle);
    }
    ensure(hit.iter().all(|&x| x), || {
        "some member of H has no nearby grid minimizer".into()
    })?;
    Ok(format!(
        "D_2 {:.6}, D_3 {:.6}; {} near-minimizers all within {worst:.4} rad of H",
        g2.width,
        g3.width,
        near.len()
    ))
}

/// 9. argmin over t of width_for_t is {floor((n+1)/2), ceil((n+1)/2)}.
fn t_optimality() -> Outcome {
    for n in 1..=64usize {
        let values: Vec<ExactScalar> = (1..=n).map(|t| width_for_t(n, t).unwrap()).collect();
        let min = values.iter().min().unwrap();
        let argmin: Vec<usize> = (1..=n).filter(|&t| &values[t - 1] == min).collect();
        let mut expect = vec![n.div_ceil(2), (n + 1).div_ceil(2)];
        expect.dedup();
        ensure(argmin == expect, || format!("n={n}: argmin {argmin:?}"))?;
        ensure(
            *min == width_squared(n, SimplexKind::Standard).unwrap(),
            || format!("n={n}: min {min}"),
        )?;
    }
    Ok("n = 1..64".into())
}

/// 10. Regular width strictly decreases in n.
fn monotone_decrease() -> Outcome {
    let widths: Vec<ExactScalar> = (1..=64)
        .map(|n| width_squared(n, SimplexKind::Regular).unwrap())
        .collect();
    for (i, pair) in widths.windows(2).enumerate() {
        ensure(pair[1] < pair[0], || {
            format!("n={}: {} >= {}", i + 2, pair[1], pair[0])
        })?;
    }
    Ok("n = 1..64 strictly decreasing".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("1 exact width identity", exact_width_identity),
        ("2 corollary rescaling", corollary_rescaling),
        ("3 radii", radii),
        ("4 direction families", direction_families),
        ("5 sanity identity", sanity_identity),
        ("6 energy monotonicity fuzz", energy_fuzz),
        ("7 optimizer rediscovery", optimizer_rediscovery),
        ("8 low-dimensional grid oracle", grid_oracle),
        ("9 t-optimality", t_optimality),
        ("10 monotone decrease", monotone_decrease),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS [{name}] {detail}"),
            Err(why) => {
                println!("FAIL [{name}] {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
