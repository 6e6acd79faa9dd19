//! Skew-elliptical distributions end to end: density generators, sampling,
//! canonical forms and moment tensors, closed-form multivariate skewness and
//! kurtosis measures, and directional sample tests with Monte Carlo
//! calibration of critical values.

pub mod error;
pub mod numerics;

pub use error::{Error, Result};
