//! Deterministic random streams.
//!
//! Every stream used by the crate is a ChaCha8 generator whose 64-bit seed is
//! derived from `(base seed, index, domain)` by [`stream_seed`]:
//!
//! ```text
//! stream_seed(base, index, domain)
//!     = splitmix64(splitmix64(base ^ splitmix64(domain)) ^ index)
//! ```
//!
//! where `splitmix64` is the finalizer of Steele, Lea and Flood's SplitMix64
//! (golden-gamma increment followed by the two xor-shift-multiply rounds).
//! Monte Carlo chunk `i` of a run seeded with `s` uses
//! `stream(s, i, Domain::MonteCarloChunk)`; the Satake point of a synthetic
//! form at prime `p` uses `stream(s, p, Domain::FormPrime)`. Results therefore
//! never depend on thread scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seed used when a caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5EED_2025;

pub type Stream = ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u64)]
pub enum Domain {
    FormPrime = 1,
    MonteCarloChunk = 2,
    Metropolis = 3,
    Rejection = 4,
}

pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn stream_seed(base: u64, index: u64, domain: Domain) -> u64 {
    splitmix64(splitmix64(base ^ splitmix64(domain as u64)) ^ index)
}

pub fn stream(base: u64, index: u64, domain: Domain) -> Stream {
    ChaCha8Rng::seed_from_u64(stream_seed(base, index, domain))
}
