//! Independent verification path: a dense exact solver and a seedable
//! generator of random systems.

mod dense;
mod generator;

pub use dense::{dense_det, dense_solve, DenseMatrix, OracleError};
pub use generator::{
    generate, BandPosition, GeneratedSystem, GeneratorConfig, IndexSpec, RhsKind, SplitMix64,
};
