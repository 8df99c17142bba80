use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use nalgebra::DMatrix;
use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::tableaux::monomials_by_branching;
use super::Partition;
use crate::{Error, Result};

/// Minimum pairwise separation accepted by [`schur_eval_determinant`].
pub const DEGENERACY_THRESHOLD: f64 = 1e-6;

/// `s_λ(x_1, …, x_n)` compiled to its list of monomials.
#[derive(Debug, Clone)]
pub struct SchurPolynomial {
    partition: Partition,
    n: usize,
    /// Row-major `terms × n` exponent table.
    exponents: Vec<u32>,
    counts: Vec<f64>,
    exact_counts: Vec<BigUint>,
    max_exponent: u32,
}

type Compiled = HashMap<(usize, Partition), Arc<SchurPolynomial>>;

static COMPILED: LazyLock<RwLock<Compiled>> = LazyLock::new(Default::default);

impl SchurPolynomial {
    pub fn new(partition: &Partition, n: usize) -> Result<Self> {
        if partition.len() > n {
            return Err(Error::TooManyParts { partition: partition.to_string(), n });
        }
        let monomials = monomials_by_branching(partition, n);
        let mut exponents = Vec::with_capacity(monomials.len() * n);
        let mut counts = Vec::with_capacity(monomials.len());
        let mut exact_counts = Vec::with_capacity(monomials.len());
        for (exps, count) in monomials {
            exponents.extend_from_slice(&exps);
            counts.push(count.to_f64().unwrap_or(f64::INFINITY));
            exact_counts.push(count);
        }
        Ok(SchurPolynomial {
            partition: partition.clone(),
            n,
            exponents,
            counts,
            exact_counts,
            max_exponent: partition.part(0),
        })
    }

    /// Shared compiled polynomial; compiled once per `(n, λ)` for the process.
    pub fn cached(partition: &Partition, n: usize) -> Result<Arc<Self>> {
        let key = (n, partition.clone());
        if let Some(hit) = COMPILED.read().expect("schur cache poisoned").get(&key) {
            return Ok(Arc::clone(hit));
        }
        let compiled = Arc::new(SchurPolynomial::new(partition, n)?);
        let mut cache = COMPILED.write().expect("schur cache poisoned");
        Ok(Arc::clone(cache.entry(key).or_insert(compiled)))
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_monomials(&self) -> usize {
        self.counts.len()
    }

    /// Iterates `(exponent vector, multiplicity)`.
    pub fn monomials(&self) -> impl Iterator<Item = (&[u32], &BigUint)> {
        self.exponents.chunks(self.n.max(1)).zip(&self.exact_counts)
    }

    pub fn eval(&self, xs: &[Complex64]) -> Result<Complex64> {
        if xs.len() != self.n {
            return Err(Error::VariableCount { expected: self.n, got: xs.len() });
        }
        Ok(self.eval_unchecked(xs))
    }

    /// Evaluation without the arity check; `xs.len()` must equal `n`.
    pub fn eval_unchecked(&self, xs: &[Complex64]) -> Complex64 {
        let n = self.n;
        if n == 0 {
            return Complex64::new(self.counts.iter().sum(), 0.0);
        }
        let stride = self.max_exponent as usize + 1;
        let mut powers = vec![Complex64::new(1.0, 0.0); n * stride];
        for (j, &x) in xs.iter().enumerate() {
            for e in 1..stride {
                powers[j * stride + e] = powers[j * stride + e - 1] * x;
            }
        }
        let mut total = Complex64::zero();
        for (exps, &count) in self.exponents.chunks_exact(n).zip(&self.counts) {
            let mut term = Complex64::new(count, 0.0);
            for (j, &e) in exps.iter().enumerate() {
                term *= powers[j * stride + e as usize];
            }
            total += term;
        }
        total
    }
}

/// `s_λ(x_1, …, x_n)` as a sum of monomials over semistandard tableaux; total
/// on all of `ℂ^n`.
pub fn schur_eval_tableaux(lambda: &Partition, xs: &[Complex64]) -> Result<Complex64> {
    Ok(SchurPolynomial::cached(lambda, xs.len())?.eval_unchecked(xs))
}

/// `s_λ(x)` as the ratio `det(x_j^{λ_i + n - i}) / det(x_j^{n - i})`.
///
/// Fails with [`Error::DegeneratePoint`] when two variables are closer than
/// `threshold`, where the ratio is 0/0.
pub fn schur_eval_determinant(lambda: &Partition, xs: &[Complex64], threshold: f64) -> Result<Complex64> {
    let n = xs.len();
    if lambda.len() > n {
        return Err(Error::TooManyParts { partition: lambda.to_string(), n });
    }
    let mut min_sep = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            min_sep = min_sep.min((xs[i] - xs[j]).norm());
        }
    }
    if min_sep < threshold {
        return Err(Error::DegeneratePoint { min_separation: min_sep, threshold });
    }
    let alternant = |shift: &dyn Fn(usize) -> u32| {
        DMatrix::from_fn(n, n, |i, j| xs[j].powu(shift(i))).determinant()
    };
    let numerator = alternant(&|i| lambda.part(i) + (n - 1 - i) as u32);
    let denominator = alternant(&|i| (n - 1 - i) as u32);
    Ok(numerator / denominator)
}

/// `s_λ(1, …, 1)` in `n` variables, by the Weyl dimension formula
/// `∏_{i<j} (λ_i - λ_j + j - i) / (j - i)`.
pub fn dimension(lambda: &Partition, n: usize) -> BigUint {
    if lambda.len() > n {
        return BigUint::zero();
    }
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..n {
        for j in i + 1..n {
            num *= BigUint::from(lambda.part(i) - lambda.part(j) + (j - i) as u32);
            den *= BigUint::from((j - i) as u32);
        }
    }
    num / den
}

/// An element `Σ_r c_r ζ^r` of `ℤ[ζ]` for a primitive `order`-th root of
/// unity `ζ = e^{2πi/order}`, kept as its (non-reduced) coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicInteger {
    pub order: u64,
    pub coefficients: Vec<BigInt>,
}

impl CyclotomicInteger {
    pub fn to_complex(&self) -> Complex64 {
        let step = std::f64::consts::TAU / self.order as f64;
        self.coefficients
            .iter()
            .enumerate()
            .map(|(r, c)| Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), step * r as f64))
            .sum()
    }

    /// Coefficient sum, i.e. the value at `ζ = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.coefficients.iter().sum()
    }
}

/// Exact evaluation of `s_λ` at roots of unity `x_j = ζ^{residues[j]}`.
pub fn schur_eval_cyclotomic(lambda: &Partition, residues: &[u64], order: u64) -> Result<CyclotomicInteger> {
    if order == 0 {
        return Err(Error::InvalidParameter("cyclotomic order must be positive".into()));
    }
    let poly = SchurPolynomial::cached(lambda, residues.len())?;
    let mut coefficients = vec![BigInt::zero(); order as usize];
    for (exps, count) in poly.monomials() {
        let r = exps
            .iter()
            .zip(residues)
            .fold(0u64, |acc, (&e, &a)| (acc + (e as u64 % order) * (a % order)) % order);
        coefficients[r as usize] += BigInt::from(count.clone());
    }
    Ok(CyclotomicInteger { order, coefficients })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn tableaux_examples() {
        let xs = [c(0.3, 0.1), c(-1.2, 0.5), c(2.0, -0.7)];
        let e1 = schur_eval_tableaux(&p(&[1]), &xs).unwrap();
        let sum: Complex64 = xs.iter().sum();
        assert_relative_eq!((e1 - sum).norm(), 0.0, epsilon = 1e-15);
        let ones = [c(1.0, 0.0); 3];
        assert_eq!(schur_eval_tableaux(&p(&[1, 1]), &ones).unwrap(), c(3.0, 0.0));
        assert_eq!(schur_eval_tableaux(&p(&[2, 1]), &ones).unwrap(), c(8.0, 0.0));
        assert_eq!(schur_eval_tableaux(&Partition::empty(), &ones).unwrap(), c(1.0, 0.0));
        assert!(schur_eval_tableaux(&p(&[1, 1, 1, 1]), &ones).is_err());
    }

    #[test]
    fn determinant_examples() {
        let xs = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0)];
        let v = schur_eval_determinant(&p(&[1]), &xs, DEGENERACY_THRESHOLD).unwrap();
        assert_relative_eq!((v - c(0.0, 1.0)).norm(), 0.0, epsilon = 1e-14);

        let v = schur_eval_determinant(&p(&[2]), &[c(2.0, 0.0), c(3.0, 0.0)], DEGENERACY_THRESHOLD).unwrap();
        assert_relative_eq!(v.re, 19.0, epsilon = 1e-12);

        let err = schur_eval_determinant(&p(&[1, 1]), &[c(1.0, 0.0); 3], DEGENERACY_THRESHOLD);
        assert!(matches!(err, Err(Error::DegeneratePoint { .. })));
    }

    #[test]
    fn dimension_matches_ssyt_count() {
        for n in 1..=5 {
            for w in 0..=7 {
                for lambda in Partition::all_of_weight(w, n) {
                    assert_eq!(
                        dimension(&lambda, n),
                        super::super::tableaux::ssyt_count(&lambda, n),
                        "{lambda} in {n} variables"
                    );
                }
            }
        }
    }

    #[test]
    fn cyclotomic_evaluation_is_exact() {
        // e_1 at the cube roots of unity is 1 + ζ + ζ² = 0.
        let v = schur_eval_cyclotomic(&p(&[1]), &[0, 1, 2], 3).unwrap();
        assert_eq!(v.coefficients, vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)]);
        assert_relative_eq!(v.to_complex().norm(), 0.0, epsilon = 1e-15);
        // At ζ = 1 the coefficient sum is the tableau count.
        let v = schur_eval_cyclotomic(&p(&[4, 2, 1]), &[0, 0, 0, 0], 1).unwrap();
        assert_eq!(v.coefficient_sum(), BigInt::from(dimension(&p(&[4, 2, 1]), 4)));
    }
}
