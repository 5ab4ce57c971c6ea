//! Exact unimodular algebra over `Z` and `Z/m`, and its use in classifying
//! principal bundles over connected sums of sphere bundles over spheres and
//! decomposing their gauge groups up to homotopy.

pub mod arith;
pub mod classify;
pub mod cli;
pub mod echelon;
pub mod error;
pub mod fgab;
pub mod gauge;
pub mod json;
pub mod manifold;
pub mod matrix;
pub mod orbit;
pub mod tables;

pub use error::{Error, Result};
