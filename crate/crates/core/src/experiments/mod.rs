//! Nonvanishing, sign and distribution statistics of synthetic forms, and
//! the JSON/CSV reports built on them.

mod prime_sums;
pub mod report;
mod sieve;
mod signs;
mod vertical;

pub use crate::hecke::build_form;
pub use prime_sums::{negative_prime_reciprocal_sum, prime_reciprocal_curve, zero_prime_reciprocal_sum, PrimeFilter};
pub use sieve::{
    nonvanishing_density_curve, sieve_report, write_density_csv, DensityRow, HypothesisFlags, SieveReport, SIEVE_A,
};
pub use signs::{sign_summary, summarize_signs, SignSummary};
pub use vertical::{vertical_distribution_histogram, Histogram, HistogramStatistic};
