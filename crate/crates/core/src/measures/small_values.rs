use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::montecarlo::{estimate_many, ChunkPlan, MonteCarloEstimate};
use crate::symfunc::{KappaIndex, SchurPolynomial};
use crate::{Error, Result};

/// Where the small-value set is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum TorusDomain {
    /// `[0, 2π]^n` with independent uniform angles.
    #[default]
    Full,
    /// The subtorus `Σ θ_j ≡ 0`, uniform in the free angles.
    Constrained,
}

/// Fraction of the torus where `|S_κ(e^{iθ_1}, …, e^{iθ_n})| < δ`.
pub fn small_value_measure(
    kappa: &KappaIndex,
    delta: f64,
    samples: u64,
    seed: u64,
    domain: TorusDomain,
) -> Result<MonteCarloEstimate> {
    if delta.is_nan() || delta <= 0.0 {
        return Err(Error::InvalidParameter(format!("delta must be positive, got {delta}")));
    }
    let n = kappa.n();
    let poly = SchurPolynomial::cached(&kappa.partition(), n)?;
    let draw = |rng: &mut crate::rng::Stream| -> Result<Vec<Complex64>> {
        let mut angles: Vec<f64> = (0..n).map(|_| rng.random::<f64>() * TAU).collect();
        if domain == TorusDomain::Constrained {
            angles[n - 1] = -angles[..n - 1].iter().sum::<f64>();
        }
        Ok(angles.iter().map(|&t| Complex64::from_polar(1.0, t)).collect())
    };
    let est = estimate_many(samples, seed, ChunkPlan::default(), 1, draw, |xs, out| {
        let hit = poly.eval_unchecked(xs).norm() < delta;
        out[0] = Complex64::new(if hit { 1.0 } else { 0.0 }, 0.0);
    })?;
    Ok(est[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extreme_thresholds() {
        let k = KappaIndex::from_slice(&[1, 0]).unwrap();
        let all = small_value_measure(&k, 3.0 + 1e-9, 10_000, 1, TorusDomain::Full).unwrap();
        assert_eq!(all.value.re, 1.0);
        let none = small_value_measure(&k, 1e-9, 10_000, 1, TorusDomain::Full).unwrap();
        assert_eq!(none.value.re, 0.0);
        assert!(small_value_measure(&k, 0.0, 10, 1, TorusDomain::Full).is_err());
    }

    #[test]
    fn measure_is_monotone_in_delta() {
        let k = KappaIndex::from_slice(&[1, 1]).unwrap();
        let vals: Vec<f64> = [0.01, 0.1, 1.0]
            .iter()
            .map(|&d| small_value_measure(&k, d, 20_000, 3, TorusDomain::Constrained).unwrap().value.re)
            .collect();
        assert!(vals[0] <= vals[1] && vals[1] <= vals[2]);
    }
}
