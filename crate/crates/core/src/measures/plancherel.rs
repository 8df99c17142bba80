use rand::Rng;

use super::sample_sato_tate;
use crate::hecke::SatakePoint;
use crate::{Error, Result};

/// Proposals allowed per Plancherel draw before the sampler gives up.
pub const REJECTION_CAP: u64 = 1_000_000;

/// `Z_p = ∏_{j=2}^n (1 - p^{-j}) / (1 - p^{-1})`.
pub fn plancherel_normalizer(n: usize, p: u64) -> f64 {
    let q = 1.0 / p as f64;
    (2..=n).map(|j| (1.0 - q.powi(j as i32)) / (1.0 - q)).product()
}

/// Uniform upper bound `Z_p (1 - 1/p)^{-2·C(n,2)}` of [`plancherel_weight`],
/// from `|e^{iθ_l} - p^{-1} e^{iθ_m}| >= 1 - 1/p`.
pub fn plancherel_bound(n: usize, p: u64) -> f64 {
    let pairs = (n * (n - 1) / 2) as i32;
    plancherel_normalizer(n, p) * (1.0 - 1.0 / p as f64).powi(-2 * pairs)
}

/// Radon–Nikodym weight `dμ_p / dμ_ST`:
/// `Z_p ∏_{l<m} |e^{iθ_l} - p^{-1} e^{iθ_m}|^{-2}`.
pub fn plancherel_weight(point: &SatakePoint, p: u64) -> f64 {
    let xs = point.values();
    let q = 1.0 / p as f64;
    let mut prod = 1.0;
    for l in 0..xs.len() {
        for m in l + 1..xs.len() {
            prod *= (xs[l] - xs[m] * q).norm_sqr();
        }
    }
    plancherel_normalizer(xs.len(), p) / prod
}

/// Rejection sampler for `μ_p`: Sato–Tate proposals accepted with
/// probability `w_p / M`, `M` = [`plancherel_bound`].
pub fn sample_plancherel<R: Rng + ?Sized>(n: usize, p: u64, rng: &mut R) -> Result<SatakePoint> {
    sample_plancherel_counted(n, p, rng).map(|(point, _)| point)
}

/// As [`sample_plancherel`], also returning the number of proposals used.
pub fn sample_plancherel_counted<R: Rng + ?Sized>(n: usize, p: u64, rng: &mut R) -> Result<(SatakePoint, u64)> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    if p < 2 {
        return Err(Error::InvalidParameter(format!("Plancherel parameter p = {p} < 2")));
    }
    let bound = plancherel_bound(n, p);
    for trial in 1..=REJECTION_CAP {
        let point = sample_sato_tate(n, rng);
        let u: f64 = rng.random();
        if u * bound < plancherel_weight(&point, p) {
            return Ok((point, trial));
        }
    }
    Err(Error::RejectionCap(REJECTION_CAP))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{stream, Domain};

    #[test]
    fn weight_is_positive_and_bounded() {
        let mut rng = stream(3, 0, Domain::MonteCarloChunk);
        for n in 2..=4 {
            for &p in &[2u64, 3, 5, 101] {
                let bound = plancherel_bound(n, p);
                for _ in 0..500 {
                    let w = plancherel_weight(&sample_sato_tate(n, &mut rng), p);
                    assert!(w > 0.0 && w <= bound * (1.0 + 1e-12), "n={n} p={p} w={w} M={bound}");
                }
            }
        }
    }

    #[test]
    fn weight_tends_to_one_for_large_p() {
        let point = SatakePoint::from_angles(3, &[0.3, 1.9]).unwrap();
        let w_small = (plancherel_weight(&point, 1_000) - 1.0).abs();
        let w_large = (plancherel_weight(&point, 1_000_000_000) - 1.0).abs();
        assert!(w_large < 1e-8);
        assert!(w_large < w_small);
    }

    #[test]
    fn normalizer_values() {
        assert_eq!(plancherel_normalizer(2, 2), 1.5);
        assert!((plancherel_normalizer(3, 2) - 2.625).abs() < 1e-15);
    }

    #[test]
    fn samples_satisfy_invariants() {
        let mut rng = stream(4, 0, Domain::Rejection);
        for _ in 0..100 {
            let (point, trials) = sample_plancherel_counted(3, 3, &mut rng).unwrap();
            assert!(trials >= 1);
            let prod: num_complex::Complex64 = point.values().iter().product();
            assert!((prod.re - 1.0).abs() < 1e-12 && prod.im.abs() < 1e-12);
        }
        assert!(sample_plancherel(3, 1, &mut rng).is_err());
    }
}
