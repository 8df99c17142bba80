use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::SatakePoint;
use crate::symfunc::{dimension, partition_to_kappa, schur_multiply, KappaIndex, SchurExpansion, SchurPolynomial};
use crate::{Error, Result};

type ExpansionKey = (usize, Vec<u32>, Vec<u32>);

static EXPANSIONS: LazyLock<RwLock<HashMap<ExpansionKey, Arc<SchurExpansion>>>> = LazyLock::new(Default::default);

/// `S_κ(x_1, …, x_n)` through the compiled tableau sum.
pub fn schur_value(kappa: &KappaIndex, xs: &[Complex64]) -> Result<Complex64> {
    if xs.len() != kappa.n() {
        return Err(Error::VariableCount { expected: kappa.n(), got: xs.len() });
    }
    Ok(SchurPolynomial::cached(&kappa.partition(), kappa.n())?.eval_unchecked(xs))
}

/// Structure constants `d^ξ_{κκ'}` of `S_κ S_{κ'} = Σ_ξ d^ξ_{κκ'} S_ξ` on the
/// torus `x_1⋯x_n = 1`, including the `ξ = 0` term. Memoized per `(n, κ, κ')`.
pub fn hecke_product_expansion(kappa: &KappaIndex, other: &KappaIndex) -> Result<Arc<SchurExpansion>> {
    if kappa.n() != other.n() {
        return Err(Error::RankMismatch { left: kappa.n(), right: other.n() });
    }
    let key = (kappa.n(), kappa.entries().to_vec(), other.entries().to_vec());
    if let Some(hit) = EXPANSIONS.read().expect("expansion cache poisoned").get(&key) {
        return Ok(Arc::clone(hit));
    }
    let expansion = Arc::new(schur_multiply(&kappa.partition(), &other.partition(), kappa.n())?);
    let mut cache = EXPANSIONS.write().expect("expansion cache poisoned");
    Ok(Arc::clone(cache.entry(key).or_insert(expansion)))
}

/// `|S_κ(x)² - Σ_ξ d^ξ_{κκ} S_ξ(x)|` at a Satake point.
pub fn hecke_square_identity_check(kappa: &KappaIndex, point: &SatakePoint) -> Result<f64> {
    if point.n() != kappa.n() {
        return Err(Error::RankMismatch { left: kappa.n(), right: point.n() });
    }
    let xs = point.values();
    let lhs = schur_value(kappa, &xs)?.powu(2);
    let expansion = hecke_product_expansion(kappa, kappa)?;
    let mut rhs = Complex64::new(0.0, 0.0);
    for (lambda, d) in expansion.iter() {
        let xi = partition_to_kappa(lambda, kappa.n())?;
        rhs += schur_value(&xi, &xs)? * d.to_f64().unwrap_or(f64::INFINITY);
    }
    Ok((lhs - rhs).norm())
}

/// `dim λ(κ)`: the bound `|S_κ(x)| <= S_κ(1, …, 1)` on the unit torus.
pub fn coefficient_bound(kappa: &KappaIndex) -> f64 {
    dimension(&kappa.partition(), kappa.n()).to_f64().unwrap_or(f64::INFINITY)
}

/// Smallest and largest `|S_κ|` over the given points.
pub fn boundedness_scan<'a, I>(kappa: &KappaIndex, points: I) -> Result<(f64, f64)>
where
    I: IntoIterator<Item = &'a SatakePoint>,
{
    let mut lo = f64::INFINITY;
    let mut hi = 0.0f64;
    for point in points {
        let v = schur_value(kappa, &point.values())?.norm();
        lo = lo.min(v);
        hi = hi.max(v);
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::TAU;

    fn k(v: &[u32]) -> KappaIndex {
        KappaIndex::from_slice(v).unwrap()
    }

    fn as_kappa_terms(e: &SchurExpansion) -> Vec<(Vec<u32>, u64)> {
        e.by_kappa().into_iter().map(|(xi, c)| (xi.entries().to_vec(), c.try_into().unwrap())).collect()
    }

    #[test]
    fn gl3_expansions() {
        let e = hecke_product_expansion(&k(&[1, 0]), &k(&[1, 0])).unwrap();
        assert_eq!(as_kappa_terms(&e), vec![(vec![0, 1], 1), (vec![2, 0], 1)]);
        assert_eq!(e.constant_term(), 0u32.into());

        let e = hecke_product_expansion(&k(&[1, 0]), &k(&[0, 1])).unwrap();
        assert_eq!(as_kappa_terms(&e), vec![(vec![0, 0], 1), (vec![1, 1], 1)]);

        let e = hecke_product_expansion(&k(&[0, 0]), &k(&[0, 0])).unwrap();
        assert_eq!(as_kappa_terms(&e), vec![(vec![0, 0], 1)]);

        assert!(matches!(
            hecke_product_expansion(&k(&[1, 0]), &k(&[1])),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn csv_dump_is_graded() {
        let e = hecke_product_expansion(&k(&[1, 0]), &k(&[1, 0])).unwrap();
        let mut buf = Vec::new();
        e.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "xi,coefficient\n0-1,1\n2-0,1\n");
    }

    #[test]
    fn identity_at_special_points() {
        for kap in KappaIndex::all_up_to(3, 3).unwrap() {
            let one = SatakePoint::identity(3).unwrap();
            assert!(hecke_square_identity_check(&kap, &one).unwrap() <= 1e-9 * coefficient_bound(&kap).powi(2));
        }
        let cube_roots = SatakePoint::from_angles(3, &[0.0, TAU / 3.0, 2.0 * TAU / 3.0]).unwrap();
        assert!(hecke_square_identity_check(&k(&[1, 0]), &cube_roots).unwrap() <= 1e-12);

        for i in 0..50 {
            let theta = 0.123 + i as f64 * 0.37;
            let point = SatakePoint::from_angles(2, &[theta]).unwrap();
            assert!(hecke_square_identity_check(&k(&[1]), &point).unwrap() <= 1e-12);
            let trace = schur_value(&k(&[1]), &point.values()).unwrap();
            assert_relative_eq!(trace.re, 2.0 * theta.cos(), epsilon = 1e-12);
        }
    }

    #[test]
    fn bound_is_dimension() {
        assert_eq!(coefficient_bound(&k(&[1, 0])), 3.0);
        assert_eq!(coefficient_bound(&k(&[1, 1])), 8.0);
        let pts: Vec<_> = (0..200)
            .map(|i| SatakePoint::from_angles(3, &[i as f64 * 0.71, i as f64 * 1.33]).unwrap())
            .collect();
        let (lo, hi) = boundedness_scan(&k(&[1, 1]), &pts).unwrap();
        assert!(0.0 <= lo && lo <= hi && hi <= 8.0 + 1e-12);
    }
}
