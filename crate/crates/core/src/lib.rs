//! Exact width theory for regular simplices.
//!
//! The standard simplex `D_n` is the convex hull of the `n + 1` standard basis
//! vectors of `R^{n+1}`; the regular simplex with unit edges is `D_n / sqrt(2)`.
//! This crate provides
//!
//! - [`geometry`]: vectors, directions, point sets and projection width,
//! - [`closed_form`]: exact rational widths, radii and two-value direction data,
//! - [`energy`]: the centroid-shift operator and the 1-mean energy,
//! - [`directions`]: construction and recognition of the optimal direction families,
//! - [`optimizer`]: a numerical width minimizer and brute-force oracles,
//! - [`cli`]: the `simplexwidth` command line front end.

pub mod cli;
pub mod closed_form;
pub mod directions;
pub mod energy;
pub mod error;
pub mod geometry;
pub mod optimizer;

pub use closed_form::{ExactScalar, SimplexKind};
pub use error::{Error, Result};
pub use geometry::{Direction, PointSet, Vector};
pub use optimizer::{OptimizerConfig, WidthResult};
