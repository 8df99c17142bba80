use std::f64::consts::PI;

use num_complex::Complex64;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use glnstat_core::experiments::vertical_distribution_histogram;
use glnstat_core::hecke::schur_value;
use glnstat_core::measures::{
    mc_integrate, mc_integrate_many, plancherel_bound, plancherel_weight, sample_plancherel_counted,
};
use glnstat_core::rng::{stream, Domain};
use glnstat_core::{KappaIndex, MeasureSpec, SatakePoint};

fn trace(point: &SatakePoint) -> Complex64 {
    point.values().iter().sum()
}

#[test]
fn haar_trace_moments() {
    // For U Haar on SU(n), E tr U = 0 and E|tr U|^{2k} = k! whenever k < n.
    for n in [3, 4] {
        let spec = MeasureSpec::sato_tate(n);
        let est = mc_integrate_many(&spec, 400_000, 21, 3, |p, out| {
            let t = trace(p);
            out[0] = t;
            out[1] = Complex64::new(t.norm_sqr(), 0.0);
            out[2] = Complex64::new(t.norm_sqr().powi(2), 0.0);
        })
        .unwrap();
        assert!(est[0].agrees_with(Complex64::new(0.0, 0.0), 4.0, 0.0), "n={n}: {:?}", est[0]);
        assert!(est[1].agrees_with(Complex64::new(1.0, 0.0), 4.0, 0.0), "n={n}: {:?}", est[1]);
        assert!(est[2].agrees_with(Complex64::new(2.0, 0.0), 4.0, 0.0), "n={n}: {:?}", est[2]);
    }
}

#[test]
fn structure_constants_match_integrals() {
    // d^ξ_{κκ'} = ∫ S_κ S_κ' conj(S_ξ) dμ_ST by orthonormality.
    let k = KappaIndex::from_slice(&[1, 0]).unwrap();
    let xis = [[2, 0], [0, 1], [1, 1], [0, 0]];
    let expected = [1.0, 1.0, 0.0, 0.0];
    let est = mc_integrate_many(&MeasureSpec::sato_tate(3), 400_000, 4, xis.len(), |p, out| {
        let xs = p.values();
        let square = schur_value(&k, &xs).unwrap().powu(2);
        for (o, xi) in out.iter_mut().zip(&xis) {
            *o = square * schur_value(&KappaIndex::from_slice(xi).unwrap(), &xs).unwrap().conj();
        }
    })
    .unwrap();
    for ((e, want), xi) in est.iter().zip(expected).zip(xis) {
        assert!(e.agrees_with(Complex64::new(want, 0.0), 4.0, 0.0), "ξ={xi:?}: {e:?}");
    }
}

#[test]
fn gl2_plancherel_moments_have_closed_form() {
    // Under μ_p on SU(2), ∫ X_m dμ_p = p^{-m/2} for even m and 0 for odd m,
    // where X_m(θ) = sin((m+1)θ)/sin θ = S_(m).
    for p in [2u64, 3, 5] {
        let ks: Vec<KappaIndex> = (1..=4).map(|m| KappaIndex::from_slice(&[m]).unwrap()).collect();
        let est = mc_integrate_many(&MeasureSpec::plancherel(2, p), 200_000, p, ks.len(), |pt, out| {
            let xs = pt.values();
            for (o, k) in out.iter_mut().zip(&ks) {
                *o = schur_value(k, &xs).unwrap();
            }
        })
        .unwrap();
        for (m, e) in (1..=4).zip(&est) {
            let want = if m % 2 == 0 { (p as f64).powf(-(m as f64) / 2.0) } else { 0.0 };
            assert!(e.agrees_with(Complex64::new(want, 0.0), 4.0, 0.0), "p={p} m={m}: {e:?} vs {want}");
        }
    }
}

#[test]
fn plancherel_sampler_matches_reweighted_sato_tate() {
    // ∫ |tr|² dμ_p computed two ways: rejection sampling, and w_p-weighted Haar draws.
    for (n, p) in [(2, 2), (3, 5), (3, 7)] {
        let f = |pt: &SatakePoint| Complex64::new(trace(pt).norm_sqr(), 0.0);
        let direct = mc_integrate(f, &MeasureSpec::plancherel(n, p), 200_000, 8).unwrap();
        let weighted = mc_integrate(
            |pt| f(pt) * plancherel_weight(pt, p),
            &MeasureSpec::sato_tate(n),
            400_000,
            9,
        )
        .unwrap();
        let tol = 4.0 * (direct.stderr.powi(2) + weighted.stderr.powi(2)).sqrt();
        assert!(
            (direct.value - weighted.value).norm() <= tol,
            "n={n} p={p}: {} vs {}",
            direct.value,
            weighted.value
        );
        // Sato–Tate gives exactly 1; μ_p is measurably different.
        assert!((direct.value.re - 1.0).abs() > 4.0 * direct.stderr, "n={n} p={p}: {direct:?}");
    }
}

#[test]
fn rejection_acceptance_rate_is_one_over_bound() {
    for (n, p) in [(2, 2), (3, 3), (3, 101)] {
        let mut rng = stream(31, n as u64 * 1000 + p, Domain::Rejection);
        let accepted = 50_000u64;
        let trials: u64 = (0..accepted).map(|_| sample_plancherel_counted(n, p, &mut rng).unwrap().1).sum();
        let q = 1.0 / plancherel_bound(n, p);
        let rate = accepted as f64 / trials as f64;
        let sd = q * ((1.0 - q) / accepted as f64).sqrt();
        assert!((rate - q).abs() <= 4.0 * sd, "n={n} p={p}: rate {rate} vs {q}");
    }
}

/// Semicircle law on [-2, 2]: CDF of `sqrt(4 - x²) / (2π)`.
fn semicircle_cdf(x: f64) -> f64 {
    let x = x.clamp(-2.0, 2.0);
    0.5 + x * (4.0 - x * x).sqrt() / (4.0 * PI) + (x / 2.0).asin() / PI
}

#[test]
fn gl2_trace_histogram_is_semicircular() {
    let kappa = KappaIndex::from_slice(&[1]).unwrap();
    let samples = 200_000;
    let bins = 20;
    let hist = vertical_distribution_histogram(&MeasureSpec::sato_tate(2), &kappa, bins, samples, 17).unwrap();
    let edges = hist.edges();
    assert_eq!((edges[0], edges[bins]), (-2.0, 2.0));
    let chi2: f64 = hist
        .mass
        .iter()
        .zip(edges.windows(2))
        .map(|(&m, e)| {
            let expected = samples as f64 * (semicircle_cdf(e[1]) - semicircle_cdf(e[0]));
            let observed = m * samples as f64;
            (observed - expected).powi(2) / expected
        })
        .sum();
    let critical = ChiSquared::new((bins - 1) as f64).unwrap().inverse_cdf(0.99);
    assert!(chi2 < critical, "χ² = {chi2} vs {critical}");
}

#[test]
fn empty_index_histogram_is_a_point_mass() {
    let hist = vertical_distribution_histogram(&MeasureSpec::sato_tate(3), &KappaIndex::zero(3).unwrap(), 10, 1_000, 1).unwrap();
    assert!((hist.mass.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    assert_eq!(hist.mass.iter().filter(|&&m| m > 0.0).count(), 1);
}
