//! Two-value directions and the optimal direction families of `D_n`.
//!
//! A two-value direction is a unit vector orthogonal to `1` whose
//! coordinates take only the values `alpha < 0 < beta`, with `t` of them at
//! `alpha`. Along such a direction `D_n` has projection width `beta - alpha`.
//! For odd `n` the optimal family is the balanced sign vectors scaled by
//! `1/sqrt(n+1)`; for even `n` the constructed optimal family is `t = n/2`.
//! For even `n`, membership in that family is sufficient for optimality but
//! a `false` from [`is_optimal_direction`] says nothing about suboptimality.

use itertools::Itertools;

use crate::closed_form::{alpha_beta, check_n};
use crate::error::{Error, Result};
use crate::geometry::{Direction, Vector, DIRECTION_TOLERANCE};

/// Largest `n` for which [`enumerate_optimal_directions`] will enumerate.
pub const ENUMERATION_CAP: usize = 20;

/// Per-coordinate tolerance for [`is_optimal_direction`].
pub const MEMBERSHIP_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct TwoValueDirection {
    pub n: usize,
    pub t: usize,
    /// Sorted indices carrying `alpha`.
    pub low_set: Vec<usize>,
    pub direction: Direction,
}

/// `alpha` on `low_set`, `beta` on the remaining `n + 1 - t` coordinates.
pub fn make_two_value_direction(
    n: usize,
    t: usize,
    low_set: &[usize],
) -> Result<TwoValueDirection> {
    let (alpha, beta) = alpha_beta(n, t)?;
    if low_set.len() != t {
        return Err(Error::InvalidLowSet(format!(
            "expected {t} indices, got {}",
            low_set.len()
        )));
    }
    let mut low: Vec<usize> = low_set.to_vec();
    low.sort_unstable();
    if let Some(&bad) = low.iter().find(|&&i| i > n) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            dim: n + 1,
        });
    }
    if low.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidLowSet("indices must be distinct".into()));
    }

    let mut coords = vec![beta; n + 1];
    for &i in &low {
        coords[i] = alpha;
    }
    let direction = Direction::new_sum_zero(Vector::new(coords)?)?;
    Ok(TwoValueDirection {
        n,
        t,
        low_set: low,
        direction,
    })
}

/// Every two-value direction of `D_n` with exactly `t` low coordinates, in
/// lexicographic order of the low set.
pub fn enumerate_two_value_family(n: usize, t: usize) -> Result<Vec<TwoValueDirection>> {
    check_cap(n)?;
    (0..=n)
        .combinations(t)
        .map(|low| make_two_value_direction(n, t, &low))
        .collect()
}

/// The optimal directions of `D_n` (`n <= 20`).
///
/// Odd `n`: all balanced `+-1/sqrt(n+1)` sign vectors, `C(n+1, (n+1)/2)` of
/// them. Even `n`: all two-value directions with `t = n/2`, `C(n+1, n/2)`.
pub fn enumerate_optimal_directions(n: usize) -> Result<Vec<Direction>> {
    check_cap(n)?;
    if n % 2 == 1 {
        let half = n.div_ceil(2);
        let scale = 1.0 / ((n + 1) as f64).sqrt();
        (0..=n)
            .combinations(half)
            .map(|negative| {
                let mut coords = vec![scale; n + 1];
                for i in negative {
                    coords[i] = -scale;
                }
                Direction::new_sum_zero(Vector::new(coords)?)
            })
            .collect()
    } else {
        Ok(enumerate_two_value_family(n, n / 2)?
            .into_iter()
            .map(|d| d.direction)
            .collect())
    }
}

fn check_cap(n: usize) -> Result<()> {
    check_n(n)?;
    if n > ENUMERATION_CAP {
        return Err(Error::EnumerationCap {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(())
}

/// Structural membership test: does `u` or `-u` belong to the optimal family
/// of `D_n` (coordinates compared within [`MEMBERSHIP_TOLERANCE`])?
pub fn is_optimal_direction(n: usize, u: &Direction) -> Result<bool> {
    check_n(n)?;
    if u.dim() != n + 1 {
        return Err(Error::DimensionMismatch {
            left: n + 1,
            right: u.dim(),
        });
    }
    let sum = u.vector().sum();
    if sum.abs() > DIRECTION_TOLERANCE {
        return Err(Error::NotSumZero { sum });
    }

    let t = n.div_ceil(2);
    let (alpha, beta) = if n % 2 == 1 {
        let b = 1.0 / ((n + 1) as f64).sqrt();
        (-b, b)
    } else {
        alpha_beta(n, t)?
    };
    let matches = |sign: f64| -> bool {
        let mut low = 0usize;
        for &x in u.coords() {
            let x = sign * x;
            if (x - alpha).abs() <= MEMBERSHIP_TOLERANCE {
                low += 1;
            } else if (x - beta).abs() > MEMBERSHIP_TOLERANCE {
                return false;
            }
        }
        low == t
    };
    Ok(matches(1.0) || matches(-1.0))
}
