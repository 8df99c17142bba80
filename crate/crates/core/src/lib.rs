//! Exact symmetric-function algebra and Monte Carlo statistics for the Fourier
//! coefficients of GL(n) automorphic forms, expressed through their Satake
//! parameters.
//!
//! The crate is organised in four layers:
//!
//! - [`symfunc`]: partitions, the κ ↔ λ correspondence, Schur polynomial
//!   evaluators and Littlewood–Richardson products reduced modulo `x_1⋯x_n = 1`.
//! - [`hecke`]: Satake points, seeded synthetic forms and the structure
//!   constants `d^ξ_{κκ'}` of the Hecke relations.
//! - [`measures`]: Sato–Tate and p-adic Plancherel samplers, Monte Carlo
//!   integration with standard errors, and the small-value measure.
//! - [`experiments`]: nonvanishing counts against the sieve product, sign
//!   statistics and the JSON/CSV reports built on top of them.

pub mod error;
pub mod experiments;
pub mod hecke;
pub mod measures;
pub mod primes;
pub mod rng;
pub mod stats;
pub mod symfunc;

pub use error::{Error, Result};
pub use hecke::{SatakePoint, SyntheticForm};
pub use measures::{MeasureKind, MeasureSpec, MonteCarloEstimate};
pub use symfunc::{KappaIndex, Partition, SchurExpansion};
