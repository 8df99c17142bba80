use rayon::prelude::*;

use crate::hecke::{SyntheticForm, NUMERIC_ZERO};
use crate::symfunc::KappaIndex;
use crate::Result;

/// Which primes a reciprocal sum runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeFilter {
    /// `Re A(p^κ) < 0` (numeric zeros excluded).
    NegativeRealPart,
    /// `A(p^κ) = 0`, forced or below the numeric threshold.
    Zero,
}

impl PrimeFilter {
    fn accepts(self, c: num_complex::Complex64) -> bool {
        let zero = c.norm() < NUMERIC_ZERO;
        match self {
            PrimeFilter::NegativeRealPart => !zero && c.re < 0.0,
            PrimeFilter::Zero => zero,
        }
    }
}

/// Running values of `Σ_{p <= x_i, filter} 1/p` at the given checkpoints
/// (which must be ascending and at most the form's prime bound).
pub fn prime_reciprocal_curve(
    form: &SyntheticForm,
    kappa: &KappaIndex,
    checkpoints: &[u64],
    filter: PrimeFilter,
) -> Result<Vec<f64>> {
    let x = checkpoints.iter().copied().max().unwrap_or(0);
    let primes: Vec<u64> = form.primes().iter().copied().take_while(|&p| p <= x).collect();
    let hits = primes
        .par_iter()
        .map(|&p| Ok(filter.accepts(form.coefficient_at_prime(p, kappa)?)))
        .collect::<Result<Vec<bool>>>()?;
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut sum = 0.0;
    let mut i = 0;
    for &c in checkpoints {
        while i < primes.len() && primes[i] <= c {
            if hits[i] {
                sum += 1.0 / primes[i] as f64;
            }
            i += 1;
        }
        out.push(sum);
    }
    Ok(out)
}

/// `Σ_{p <= x, Re A(p^κ) < 0} 1/p`.
pub fn negative_prime_reciprocal_sum(form: &SyntheticForm, kappa: &KappaIndex, x: u64) -> Result<f64> {
    Ok(prime_reciprocal_curve(form, kappa, &[x], PrimeFilter::NegativeRealPart)?[0])
}

/// `Σ_{p <= x, A(p^κ) = 0} 1/p`.
pub fn zero_prime_reciprocal_sum(form: &SyntheticForm, kappa: &KappaIndex, x: u64) -> Result<f64> {
    Ok(prime_reciprocal_curve(form, kappa, &[x], PrimeFilter::Zero)?[0])
}
