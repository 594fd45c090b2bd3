//! Exact closed forms for `D_n` and the unit-edge regular simplex.
//!
//! Every quantity here is the square root of a rational, so the squared value
//! is carried exactly as an [`ExactScalar`] and the root is only taken when a
//! float is requested.

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometry::Vector;

/// Largest `n` accepted by the rational operations.
pub const MAX_N: usize = 1_000_000;

/// Arbitrary-precision rational in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    /// `numer / denom`; panics if `denom == 0`.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Self(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Square root of the value as a float. NaN for negative values.
    pub fn sqrt_f64(&self) -> f64 {
        self.to_f64().sqrt()
    }
}

impl From<BigRational> for ExactScalar {
    fn from(value: BigRational) -> Self {
        Self(value)
    }
}

impl fmt::Display for ExactScalar {
    /// Always `p/q`, including `q = 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for ExactScalar {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: BigInt = p.parse().map_err(|e| format!("bad numerator {p:?}: {e}"))?;
        let q: BigInt = q
            .parse()
            .map_err(|e| format!("bad denominator {q:?}: {e}"))?;
        if q.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Self(BigRational::new(p, q)))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'a ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

/// `D_n` (vertices `e_i`) or the unit-edge simplex `D_n / sqrt(2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimplexKind {
    Standard,
    Regular,
}

impl SimplexKind {
    pub fn name(self) -> &'static str {
        match self {
            SimplexKind::Standard => "standard",
            SimplexKind::Regular => "regular",
        }
    }
}

impl FromStr for SimplexKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "standard" => Ok(SimplexKind::Standard),
            "regular" => Ok(SimplexKind::Regular),
            other => Err(format!("unknown simplex kind {other:?}")),
        }
    }
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidDimension {
            n: n as i64,
            expected: "1 <= n <= 1000000",
        });
    }
    Ok(())
}

fn check_t(n: usize, t: usize) -> Result<()> {
    check_n(n)?;
    if t == 0 || t > n {
        return Err(Error::TOutOfRange { n, t });
    }
    Ok(())
}

fn ratio(p: u128, q: u128) -> ExactScalar {
    ExactScalar::new(BigInt::from(p), BigInt::from(q))
}

/// Squared width: `4/(n+1)` for odd `n`, `4(n+1)/(n(n+2))` for even `n`
/// (standard); half of that for the regular simplex.
pub fn width_squared(n: usize, kind: SimplexKind) -> Result<ExactScalar> {
    check_n(n)?;
    let m = n as u128;
    let standard = if n % 2 == 1 {
        ratio(4, m + 1)
    } else {
        ratio(4 * (m + 1), m * (m + 2))
    };
    Ok(match kind {
        SimplexKind::Standard => standard,
        SimplexKind::Regular => standard / ExactScalar::from_integer(2),
    })
}

/// Width as a float.
pub fn width(n: usize, kind: SimplexKind) -> Result<f64> {
    Ok(width_squared(n, kind)?.sqrt_f64())
}

/// The center `1/(n+1)` of `D_n`.
pub fn center(n: usize) -> Result<Vector> {
    check_n(n)?;
    Vector::new(vec![1.0 / (n as f64 + 1.0); n + 1])
}

/// Squared distance from the center of `D_n` to each of its vertices: `n/(n+1)`.
pub fn circumdistance_squared(n: usize) -> Result<ExactScalar> {
    check_n(n)?;
    let m = n as u128;
    Ok(ratio(m, m + 1))
}

/// Squared radius of the largest ball inside `D_n` within its hyperplane:
/// `1/(n(n+1))`.
pub fn indistance_squared(n: usize) -> Result<ExactScalar> {
    check_n(n)?;
    let m = n as u128;
    Ok(ratio(1, m * (m + 1)))
}

/// Squared inradius of the unit-edge simplex: `1/(2n(n+1))`.
pub fn inradius_squared(n: usize) -> Result<ExactScalar> {
    check_n(n)?;
    let m = n as u128;
    Ok(ratio(1, 2 * m * (m + 1)))
}

/// Squared circumradius of the unit-edge simplex: `n/(2(n+1))`.
pub fn circumradius_squared(n: usize) -> Result<ExactScalar> {
    check_n(n)?;
    let m = n as u128;
    Ok(ratio(m, 2 * (m + 1)))
}

/// Squared projection width of `D_n` along a unit sum-zero direction with `t`
/// coordinates at `alpha` and `n + 1 - t` at `beta`: `(n+1)/(t(n+1-t))`.
pub fn width_for_t(n: usize, t: usize) -> Result<ExactScalar> {
    check_t(n, t)?;
    let (m, t) = (n as u128, t as u128);
    Ok(ratio(m + 1, t * (m + 1 - t)))
}

/// Exact `(alpha^2, beta^2)` of the `t`-family:
/// `alpha^2 = (n+1-t)/(t(n+1))`, `beta^2 = t/((n+1-t)(n+1))`.
pub fn alpha_beta_squared(n: usize, t: usize) -> Result<(ExactScalar, ExactScalar)> {
    check_t(n, t)?;
    let (m, t) = (n as u128, t as u128);
    Ok((
        ratio(m + 1 - t, t * (m + 1)),
        ratio(t, (m + 1 - t) * (m + 1)),
    ))
}

/// `(alpha, beta)` with `alpha < 0 < beta`, `t alpha + (n+1-t) beta = 0` and
/// `t alpha^2 + (n+1-t) beta^2 = 1`.
pub fn alpha_beta(n: usize, t: usize) -> Result<(f64, f64)> {
    let (a2, b2) = alpha_beta_squared(n, t)?;
    Ok((-a2.sqrt_f64(), b2.sqrt_f64()))
}

/// The `t` values in `1..=n` minimizing `width_for_t(n, t)`.
pub fn optimal_t_values(n: usize) -> Result<Vec<usize>> {
    check_n(n)?;
    let lo = n.div_ceil(2);
    let hi = (n + 2) / 2;
    Ok(if lo == hi { vec![lo] } else { vec![lo, hi] })
}
