//! Ambient vectors, unit directions, point sets and projection width.

use std::fmt;

use crate::error::{Error, Result};

/// Absolute tolerance on `|u|^2 - 1` and on `<u, 1>` when validating directions.
pub const DIRECTION_TOLERANCE: f64 = 1e-12;

/// A dense point or direction in `R^d`, `d >= 1`, with finite coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    coords: Vec<f64>,
}

impl Vector {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some(index) = coords.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { coords })
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::new(vec![0.0; dim])
    }

    /// The all-ones vector `(1, ..., 1)`.
    pub fn ones(dim: usize) -> Result<Self> {
        Self::new(vec![1.0; dim])
    }

    /// The `i`-th standard basis vector (0-based).
    pub fn basis(dim: usize, i: usize) -> Result<Self> {
        if i >= dim {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
        let mut coords = vec![0.0; dim];
        coords[i] = 1.0;
        Self::new(coords)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    #[inline]
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    pub fn dot(&self, other: &Vector) -> Result<f64> {
        check_dims(self.dim(), other.dim())?;
        Ok(dot(&self.coords, &other.coords))
    }

    pub fn norm_squared(&self) -> f64 {
        dot(&self.coords, &self.coords)
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Sum of coordinates, i.e. `<v, 1>`.
    pub fn sum(&self) -> f64 {
        self.coords.iter().sum()
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        check_dims(self.dim(), other.dim())?;
        Vector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        check_dims(self.dim(), other.dim())?;
        Vector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn scale(&self, s: f64) -> Result<Vector> {
        Vector::new(self.coords.iter().map(|x| x * s).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector {
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A unit vector, optionally certified to lie in the sum-zero subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct Direction {
    vec: Vector,
    sum_zero: bool,
}

impl Direction {
    /// Wraps an already-unit vector.
    pub fn new(vec: Vector) -> Result<Self> {
        let norm_squared = vec.norm_squared();
        if (norm_squared - 1.0).abs() > DIRECTION_TOLERANCE {
            return Err(Error::NotUnit { norm_squared });
        }
        Ok(Self {
            vec,
            sum_zero: false,
        })
    }

    /// Wraps an already-unit vector that is orthogonal to `1`.
    pub fn new_sum_zero(vec: Vector) -> Result<Self> {
        let sum = vec.sum();
        if sum.abs() > DIRECTION_TOLERANCE {
            return Err(Error::NotSumZero { sum });
        }
        let mut dir = Self::new(vec)?;
        dir.sum_zero = true;
        Ok(dir)
    }

    /// Rescales a nonzero vector to unit length.
    pub fn normalize(vec: &Vector) -> Result<Self> {
        let norm = vec.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotUnit {
                norm_squared: norm * norm,
            });
        }
        Self::new(vec.scale(1.0 / norm)?)
    }

    /// Projects out the `1` component, then rescales to unit length.
    pub fn normalize_sum_zero(vec: &Vector) -> Result<Self> {
        let mean = vec.sum() / vec.dim() as f64;
        let centered = Vector::new(vec.coords().iter().map(|x| x - mean).collect())?;
        let norm = centered.norm();
        if norm == 0.0 {
            return Err(Error::NotUnit { norm_squared: 0.0 });
        }
        Self::new_sum_zero(centered.scale(1.0 / norm)?)
    }

    #[inline]
    pub fn vector(&self) -> &Vector {
        &self.vec
    }

    #[inline]
    pub fn coords(&self) -> &[f64] {
        self.vec.coords()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.vec.dim()
    }

    #[inline]
    pub fn is_sum_zero(&self) -> bool {
        self.sum_zero
    }

    pub fn neg(&self) -> Direction {
        Direction {
            vec: self.vec.neg(),
            sum_zero: self.sum_zero,
        }
    }
}

/// A nonempty finite list of points sharing one ambient dimension.
/// Duplicates are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<Vector>,
    dim: usize,
}

impl PointSet {
    pub fn new(points: Vec<Vector>) -> Result<Self> {
        let dim = points.first().ok_or(Error::EmptyPointSet)?.dim();
        for p in &points {
            check_dims(dim, p.dim())?;
        }
        Ok(Self { points, dim })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        Self::new(
            rows.into_iter()
                .map(Vector::new)
                .collect::<Result<Vec<_>>>()?,
        )
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false; kept for API symmetry with `len`.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vector> {
        self.points.iter()
    }

    pub fn scaled(&self, s: f64) -> Result<PointSet> {
        PointSet::new(
            self.points
                .iter()
                .map(|p| p.scale(s))
                .collect::<Result<_>>()?,
        )
    }

    pub fn translated(&self, offset: &Vector) -> Result<PointSet> {
        PointSet::new(
            self.points
                .iter()
                .map(|p| p.add(offset))
                .collect::<Result<_>>()?,
        )
    }
}

/// Vertices of `D_n`: the `n + 1` standard basis vectors of `R^{n+1}`.
pub fn standard_simplex_vertices(n: usize) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::InvalidDimension {
            n: 0,
            expected: "n >= 1",
        });
    }
    let dim = n + 1;
    PointSet::new(
        (0..dim)
            .map(|i| Vector::basis(dim, i))
            .collect::<Result<_>>()?,
    )
}

/// Vertices of the unit-edge regular simplex, `D_n / sqrt(2)`.
pub fn regular_simplex_vertices(n: usize) -> Result<PointSet> {
    standard_simplex_vertices(n)?.scaled(std::f64::consts::FRAC_1_SQRT_2)
}

/// `max_p <u, p> - min_p <u, p>`.
pub fn projection_width(u: &Direction, points: &PointSet) -> Result<f64> {
    check_dims(u.dim(), points.dim())?;
    Ok(extent(u.coords(), points))
}

/// Euclidean distance.
pub fn distance(a: &Vector, b: &Vector) -> Result<f64> {
    Ok(a.sub(b)?.norm())
}

/// Projection extent along an arbitrary (not necessarily unit) vector.
/// Dimensions are assumed to agree.
pub(crate) fn extent(u: &[f64], points: &PointSet) -> f64 {
    let (lo, hi) = points
        .iter()
        .map(|p| dot(u, p.coords()))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
            (lo.min(x), hi.max(x))
        });
    hi - lo
}

#[inline]
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn check_dims(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}
