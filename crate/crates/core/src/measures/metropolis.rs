use std::f64::consts::{PI, TAU};

use rand::Rng;

use super::sato_tate_density;
use crate::hecke::SatakePoint;
use crate::rng::{stream, Domain};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct MetropolisConfig {
    pub burn_in: usize,
    /// Steps between retained states.
    pub thin: usize,
    /// Half-width of the uniform step applied to each free angle.
    pub step: f64,
}

impl Default for MetropolisConfig {
    fn default() -> Self {
        MetropolisConfig { burn_in: 2_000, thin: 25, step: PI }
    }
}

/// Random-walk Metropolis chain on the free angles `θ_1..θ_{n-1}` targeting
/// [`sato_tate_density`]. Kept as an independent check on the direct
/// sampler; it shares nothing with it beyond the density.
pub fn metropolis_sato_tate(n: usize, samples: usize, seed: u64, config: MetropolisConfig) -> Result<Vec<SatakePoint>> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    let mut rng = stream(seed, n as u64, Domain::Metropolis);
    let mut free: Vec<f64> = (0..n - 1).map(|j| TAU * j as f64 / n as f64).collect();
    let mut current = SatakePoint::from_angles(n, &free)?;
    let mut density = sato_tate_density(&current);
    let mut out = Vec::with_capacity(samples);
    let total = config.burn_in + samples * config.thin.max(1);
    for step in 1..=total {
        let proposal: Vec<f64> = free.iter().map(|&t| t + rng.random_range(-config.step..config.step)).collect();
        let candidate = SatakePoint::from_angles(n, &proposal)?;
        let cand_density = sato_tate_density(&candidate);
        if cand_density >= density || rng.random::<f64>() * density < cand_density {
            free = candidate.angles()[..n - 1].to_vec();
            current = candidate;
            density = cand_density;
        }
        if step > config.burn_in && (step - config.burn_in).is_multiple_of(config.thin.max(1)) {
            out.push(current.clone());
        }
    }
    Ok(out)
}
