use std::f64::consts::TAU;

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::hecke::SatakePoint;

/// Eigenangles of a Haar-random matrix in `SU(n)`.
///
/// A standard complex Gaussian matrix is orthonormalized by QR with the
/// diagonal of `R` made positive real, which gives a Haar unitary `Q`. The
/// eigenangles of `Q` are shifted by `(2πk - arg det Q)/n` for a uniform
/// `k ∈ {0, …, n-1}`, i.e. `Q` is multiplied by a uniformly chosen `n`-th
/// root of `det Q^{-1}`, and returned in uniformly random order. Draws whose
/// `R` has a vanishing diagonal entry or whose Schur iteration fails are
/// redrawn.
pub fn sample_sato_tate<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SatakePoint {
    assert!(n >= 2, "rank must be at least 2");
    loop {
        let g = DMatrix::<Complex64>::from_fn(n, n, |_, _| {
            Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
        });
        let (mut q, r) = g.qr().unpack();
        let mut degenerate = false;
        for j in 0..n {
            let d = r[(j, j)];
            let m = d.norm();
            if m < 1e-12 {
                degenerate = true;
                break;
            }
            let phase = d / m;
            for i in 0..n {
                q[(i, j)] *= phase;
            }
        }
        if degenerate {
            continue;
        }
        let Some(eigenvalues) = Schur::try_new(q, f64::EPSILON, 10_000).and_then(|s| s.eigenvalues()) else {
            continue;
        };
        let mut angles: Vec<f64> = eigenvalues.iter().map(|z| z.arg()).collect();
        let det_arg: f64 = angles.iter().sum();
        let k = rng.random_range(0..n);
        let twist = (TAU * k as f64 - det_arg) / n as f64;
        angles.iter_mut().for_each(|a| *a += twist);
        angles.shuffle(rng);
        return SatakePoint::from_angles(n, &angles).expect("rank checked above");
    }
}

/// Unnormalized Weyl density `∏_{l<m} |e^{iθ_l} - e^{iθ_m}|²`.
pub fn sato_tate_density(point: &SatakePoint) -> f64 {
    let xs = point.values();
    let mut d = 1.0;
    for l in 0..xs.len() {
        for m in l + 1..xs.len() {
            d *= (xs[l] - xs[m]).norm_sqr();
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{stream, Domain};
    use approx::assert_relative_eq;

    #[test]
    fn draws_lie_on_the_special_torus() {
        let mut rng = stream(1, 0, Domain::MonteCarloChunk);
        for n in 2..=5 {
            for _ in 0..200 {
                let p = sample_sato_tate(n, &mut rng);
                assert_eq!(p.n(), n);
                let prod: Complex64 = p.values().iter().product();
                assert!((prod - Complex64::new(1.0, 0.0)).norm() <= 1e-12);
                assert!(p.angles().iter().all(|a| (0.0..TAU).contains(a)));
            }
        }
    }

    #[test]
    fn density_examples() {
        let coincident = SatakePoint::from_angles(3, &[0.4, 0.4]).unwrap();
        assert_eq!(sato_tate_density(&coincident), 0.0);
        let theta = 0.7;
        let p = SatakePoint::from_angles(2, &[theta]).unwrap();
        assert_relative_eq!(sato_tate_density(&p), 4.0 * theta.sin().powi(2), epsilon = 1e-13);
        let roots = SatakePoint::from_angles(3, &[0.0, TAU / 3.0, 2.0 * TAU / 3.0]).unwrap();
        assert_relative_eq!(sato_tate_density(&roots), 27.0, epsilon = 1e-12);
    }
}
