use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::hecke::coefficient_bound;
use crate::measures::MeasureSpec;
use crate::rng::{stream, Domain};
use crate::symfunc::{KappaIndex, SchurPolynomial};
use crate::{Error, Result};

const CHUNK: u64 = 1 << 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HistogramStatistic {
    /// `Re S_κ` on `[-b, b]`, for palindromic κ.
    RealPart,
    /// `|S_κ|` on `[0, b]`.
    Modulus,
}

/// Equal-width histogram normalized to total mass 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub statistic: HistogramStatistic,
    pub lo: f64,
    pub hi: f64,
    pub mass: Vec<f64>,
    pub samples: u64,
}

impl Histogram {
    pub fn edges(&self) -> Vec<f64> {
        let w = (self.hi - self.lo) / self.mass.len() as f64;
        (0..=self.mass.len()).map(|i| self.lo + w * i as f64).collect()
    }
}

/// Distribution of `A(p^κ) = S_κ` at points drawn from `spec`.
///
/// Chunk `i` of the draws uses `rng::stream(seed, i, Domain::MonteCarloChunk)`;
/// integer bin counts are summed, so the result does not depend on threading.
pub fn vertical_distribution_histogram(
    spec: &MeasureSpec,
    kappa: &KappaIndex,
    bins: usize,
    samples: u64,
    seed: u64,
) -> Result<Histogram> {
    if bins < 2 {
        return Err(Error::InvalidParameter(format!("need at least 2 bins, got {bins}")));
    }
    if samples == 0 {
        return Err(Error::InvalidParameter("need at least one sample".into()));
    }
    spec.validate()?;
    if kappa.n() != spec.n {
        return Err(Error::RankMismatch { left: kappa.n(), right: spec.n });
    }
    let statistic = if kappa.is_palindromic() { HistogramStatistic::RealPart } else { HistogramStatistic::Modulus };
    let bound = coefficient_bound(kappa);
    let (lo, hi) = match statistic {
        HistogramStatistic::RealPart => (-bound, bound),
        HistogramStatistic::Modulus => (0.0, bound),
    };
    let poly = SchurPolynomial::cached(&kappa.partition(), kappa.n())?;
    let chunks = samples.div_ceil(CHUNK) as usize;
    let partial = (0..chunks)
        .into_par_iter()
        .map(|i| {
            let mut rng = stream(seed, i as u64, Domain::MonteCarloChunk);
            let len = CHUNK.min(samples - i as u64 * CHUNK);
            let mut counts = vec![0u64; bins];
            for _ in 0..len {
                let point = spec.sample(&mut rng)?;
                let v = poly.eval_unchecked(&point.values());
                let s = match statistic {
                    HistogramStatistic::RealPart => v.re,
                    HistogramStatistic::Modulus => v.norm(),
                };
                let b = (((s - lo) / (hi - lo)) * bins as f64).floor();
                counts[(b.max(0.0) as usize).min(bins - 1)] += 1;
            }
            Ok(counts)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut counts = vec![0u64; bins];
    for c in partial {
        counts.iter_mut().zip(c).for_each(|(a, b)| *a += b);
    }
    Ok(Histogram {
        statistic,
        lo,
        hi,
        mass: counts.iter().map(|&c| c as f64 / samples as f64).collect(),
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_kappa_is_a_point_mass() {
        let h = vertical_distribution_histogram(&MeasureSpec::sato_tate(3), &KappaIndex::zero(3).unwrap(), 10, 1000, 1)
            .unwrap();
        assert_eq!(h.statistic, HistogramStatistic::RealPart);
        assert_eq!(h.mass.iter().filter(|&&m| m > 0.0).count(), 1);
        assert_eq!(*h.mass.last().unwrap(), 1.0);
    }

    #[test]
    fn mass_sums_to_one() {
        let k = KappaIndex::from_slice(&[1, 0]).unwrap();
        let h = vertical_distribution_histogram(&MeasureSpec::plancherel(3, 7), &k, 12, 5000, 2).unwrap();
        assert_eq!(h.statistic, HistogramStatistic::Modulus);
        assert!((h.mass.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert_eq!(h.edges().len(), 13);
        assert!(vertical_distribution_histogram(&MeasureSpec::sato_tate(3), &k, 1, 10, 1).is_err());
    }
}
