use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::relations::schur_value;
use super::SatakePoint;
use crate::measures::MeasureSpec;
use crate::primes::{factorize, factorize_with, is_prime, primes_up_to, smallest_prime_factors};
use crate::rng::{stream, Domain};
use crate::symfunc::KappaIndex;
use crate::{Error, Result};

/// Coefficients with modulus below this are treated as zero.
pub const NUMERIC_ZERO: f64 = 1e-12;

const TABLE_CHUNK: usize = 1 << 14;

/// Primes whose coefficient `A(p^κ)` is overridden to exactly zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ForcedZeros {
    #[default]
    None,
    All,
    List { primes: BTreeSet<u64> },
    /// Primes `p` with `p mod modulus` in `residues`.
    Residue { modulus: u64, residues: BTreeSet<u64> },
    /// Primes strictly greater than `bound`.
    Above { bound: u64 },
}

impl ForcedZeros {
    pub fn contains(&self, p: u64) -> bool {
        match self {
            ForcedZeros::None => false,
            ForcedZeros::All => true,
            ForcedZeros::List { primes } => primes.contains(&p),
            ForcedZeros::Residue { modulus, residues } => residues.contains(&(p % modulus)),
            ForcedZeros::Above { bound } => p > *bound,
        }
    }

    pub fn list<I: IntoIterator<Item = u64>>(primes: I) -> Self {
        ForcedZeros::List { primes: primes.into_iter().collect() }
    }

    pub fn residue(modulus: u64, residues: &[u64]) -> Self {
        ForcedZeros::Residue { modulus, residues: residues.iter().copied().collect() }
    }
}

/// Textual form: `none`, `all`, `list:2,3`, `mod:4:3` (residues may be a
/// comma list), `above:1000`.
impl FromStr for ForcedZeros {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("bad forced-zero spec {s:?}"));
        let nums = |t: &str| -> Result<Vec<u64>> {
            t.split(',').map(|x| x.trim().parse::<u64>().map_err(|_| bad())).collect()
        };
        let mut parts = s.splitn(3, ':');
        match (parts.next(), parts.next(), parts.next()) {
            (Some("none"), None, None) | (Some(""), None, None) => Ok(ForcedZeros::None),
            (Some("all"), None, None) => Ok(ForcedZeros::All),
            (Some("list"), Some(list), None) => {
                let primes = nums(list)?;
                if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
                    return Err(Error::NotPrime(p));
                }
                Ok(ForcedZeros::list(primes))
            }
            (Some("mod"), Some(m), Some(r)) => {
                let modulus: u64 = m.parse().map_err(|_| bad())?;
                if modulus == 0 {
                    return Err(bad());
                }
                Ok(ForcedZeros::residue(modulus, &nums(r)?))
            }
            (Some("above"), Some(b), None) => Ok(ForcedZeros::Above { bound: b.parse().map_err(|_| bad())? }),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for ForcedZeros {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &BTreeSet<u64>| s.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self {
            ForcedZeros::None => write!(f, "none"),
            ForcedZeros::All => write!(f, "all"),
            ForcedZeros::List { primes } => write!(f, "list:{}", join(primes)),
            ForcedZeros::Residue { modulus, residues } => write!(f, "mod:{modulus}:{}", join(residues)),
            ForcedZeros::Above { bound } => write!(f, "above:{bound}"),
        }
    }
}

/// A seeded assignment `p ↦ SatakePoint` for all primes up to a bound,
/// standing in for one automorphic form.
///
/// The point at `p` is drawn from `spec` using the stream
/// `rng::stream(seed, p, Domain::FormPrime)`, so it depends only on
/// `(seed, p, spec)`.
///
/// Forced zeros model the event `A(p^κ) = 0` for the queried index κ:
/// [`SyntheticForm::coefficient_at_prime`] returns exactly zero at a forced
/// prime for every nonzero κ, and inside [`SyntheticForm::coefficient_at_m`]
/// they apply to the exponent-one factor `p ∥ m` only. Higher powers
/// `A(p^{eκ})`, `e ≥ 2`, are still evaluated at the stored Satake point.
#[derive(Debug, Clone)]
pub struct SyntheticForm {
    spec: MeasureSpec,
    seed: u64,
    prime_bound: u64,
    forced_zeros: ForcedZeros,
    primes: Vec<u64>,
    points: Vec<SatakePoint>,
}

pub fn build_form(spec: MeasureSpec, seed: u64, prime_bound: u64, forced_zeros: ForcedZeros) -> Result<SyntheticForm> {
    SyntheticForm::build(spec, seed, prime_bound, forced_zeros)
}

impl SyntheticForm {
    pub fn build(spec: MeasureSpec, seed: u64, prime_bound: u64, forced_zeros: ForcedZeros) -> Result<Self> {
        if prime_bound < 2 {
            return Err(Error::InvalidParameter(format!("prime bound {prime_bound} < 2")));
        }
        spec.validate()?;
        let primes = primes_up_to(prime_bound);
        let points = primes
            .par_iter()
            .map(|&p| spec.sample(&mut stream(seed, p, Domain::FormPrime)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SyntheticForm { spec, seed, prime_bound, forced_zeros, primes, points })
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn spec(&self) -> &MeasureSpec {
        &self.spec
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn prime_bound(&self) -> u64 {
        self.prime_bound
    }

    pub fn forced_zeros(&self) -> &ForcedZeros {
        &self.forced_zeros
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn is_forced_zero(&self, p: u64) -> bool {
        self.forced_zeros.contains(p)
    }

    pub fn point_at(&self, p: u64) -> Result<&SatakePoint> {
        if p > self.prime_bound {
            return Err(Error::PrimeOutOfRange { prime: p, bound: self.prime_bound });
        }
        self.primes
            .binary_search(&p)
            .map(|i| &self.points[i])
            .map_err(|_| Error::NotPrime(p))
    }

    fn check_rank(&self, kappa: &KappaIndex) -> Result<()> {
        if kappa.n() != self.n() {
            return Err(Error::RankMismatch { left: kappa.n(), right: self.n() });
        }
        Ok(())
    }

    /// `A(p^κ) = S_κ(π_1(p), …, π_n(p))`, or exactly zero at a forced prime.
    pub fn coefficient_at_prime(&self, p: u64, kappa: &KappaIndex) -> Result<Complex64> {
        self.check_rank(kappa)?;
        let point = self.point_at(p)?;
        if kappa.is_zero() {
            return Ok(Complex64::new(1.0, 0.0));
        }
        if self.is_forced_zero(p) {
            return Ok(Complex64::new(0.0, 0.0));
        }
        schur_value(kappa, &point.values())
    }

    /// `A((p^e)^κ)`: the forced-zero override applies at `e = 1` only.
    pub fn prime_power_coefficient(&self, p: u64, e: u32, kappa: &KappaIndex) -> Result<Complex64> {
        match e {
            0 => Ok(Complex64::new(1.0, 0.0)),
            1 => self.coefficient_at_prime(p, kappa),
            _ => {
                self.check_rank(kappa)?;
                schur_value(&kappa.scaled(e), &self.point_at(p)?.values())
            }
        }
    }

    /// `A(m^κ) = ∏_{p^e ∥ m} A((p^e)^κ)`.
    pub fn coefficient_at_m(&self, m: u64, kappa: &KappaIndex) -> Result<Complex64> {
        if m == 0 {
            return Err(Error::InvalidParameter("m must be positive".into()));
        }
        self.check_rank(kappa)?;
        factorize(m)
            .into_iter()
            .try_fold(Complex64::new(1.0, 0.0), |acc, (p, e)| Ok(acc * self.prime_power_coefficient(p, e, kappa)?))
    }

    /// `A(m^κ)` for `m = 0..=x` (index 0 holds zero). Chunks of `m` are
    /// evaluated in parallel; each entry is the product of its prime-power
    /// factors in ascending prime order, so the table is identical for any
    /// thread count.
    pub fn coefficient_table(&self, kappa: &KappaIndex, x: u64) -> Result<Vec<Complex64>> {
        self.check_rank(kappa)?;
        if x > self.prime_bound {
            return Err(Error::PrimeOutOfRange { prime: x, bound: self.prime_bound });
        }
        let limit = x as usize;
        let spf = smallest_prime_factors(x);
        // powers[i][e - 1] = A((p_i^e)^κ) for every p_i^e <= x.
        let upto = self.primes.partition_point(|&p| p <= x);
        let powers = self.primes[..upto]
            .par_iter()
            .map(|&p| {
                let mut row = Vec::new();
                let mut q = p;
                let mut e = 1;
                loop {
                    row.push(self.prime_power_coefficient(p, e, kappa)?);
                    match q.checked_mul(p) {
                        Some(next) if next <= x => {
                            q = next;
                            e += 1;
                        }
                        _ => break,
                    }
                }
                Ok(row)
            })
            .collect::<Result<Vec<Vec<Complex64>>>>()?;
        let index_of = |p: u64| self.primes.binary_search(&p).expect("factor is a tabulated prime");

        let mut table = vec![Complex64::new(0.0, 0.0); limit + 1];
        table.par_chunks_mut(TABLE_CHUNK).enumerate().for_each(|(chunk, slot)| {
            let start = chunk * TABLE_CHUNK;
            for (offset, value) in slot.iter_mut().enumerate() {
                let m = start + offset;
                if m == 0 {
                    continue;
                }
                *value = factorize_with(&spf, m)
                    .fold(Complex64::new(1.0, 0.0), |acc, (p, e)| acc * powers[index_of(p)][e as usize - 1]);
            }
        });
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::MeasureSpec;
    use approx::assert_relative_eq;

    fn kappa(v: &[u32]) -> KappaIndex {
        KappaIndex::from_slice(v).unwrap()
    }

    #[test]
    fn forced_zero_specs_parse() {
        assert_eq!("none".parse::<ForcedZeros>().unwrap(), ForcedZeros::None);
        assert_eq!("all".parse::<ForcedZeros>().unwrap(), ForcedZeros::All);
        let list: ForcedZeros = "list:2,3".parse().unwrap();
        assert!(list.contains(2) && list.contains(3) && !list.contains(5));
        let res: ForcedZeros = "mod:4:3".parse().unwrap();
        assert!(res.contains(3) && res.contains(7) && !res.contains(5));
        assert!("above:1000".parse::<ForcedZeros>().unwrap().contains(1009));
        assert!("list:4".parse::<ForcedZeros>().is_err());
        assert!("mod:0:1".parse::<ForcedZeros>().is_err());
        assert!("bogus".parse::<ForcedZeros>().is_err());
        for s in ["none", "all", "list:2,3", "mod:4:1,3", "above:7"] {
            assert_eq!(s.parse::<ForcedZeros>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn coefficients_at_primes() {
        let form = build_form(MeasureSpec::sato_tate(3), 11, 100, ForcedZeros::list([5])).unwrap();
        assert_eq!(form.coefficient_at_prime(7, &kappa(&[0, 0])).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(form.coefficient_at_prime(5, &kappa(&[1, 0])).unwrap(), Complex64::new(0.0, 0.0));
        assert!(form.coefficient_at_prime(7, &kappa(&[1, 0])).unwrap().norm() > 0.0);
        assert!(matches!(form.coefficient_at_prime(101, &kappa(&[1, 0])), Err(Error::PrimeOutOfRange { .. })));
        assert!(matches!(form.coefficient_at_prime(9, &kappa(&[1, 0])), Err(Error::NotPrime(9))));
        assert!(matches!(form.coefficient_at_prime(7, &kappa(&[1])), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn rank_two_trace() {
        let form = build_form(MeasureSpec::sato_tate(2), 3, 50, ForcedZeros::None).unwrap();
        for &p in form.primes() {
            let theta = form.point_at(p).unwrap().angles()[0];
            let a = form.coefficient_at_prime(p, &kappa(&[1])).unwrap();
            assert_relative_eq!(a.re, 2.0 * theta.cos(), epsilon = 1e-12);
            assert!(a.im.abs() < 1e-12);
        }
    }

    #[test]
    fn coefficients_at_composites() {
        let form = build_form(MeasureSpec::sato_tate(3), 5, 1000, ForcedZeros::None).unwrap();
        let k = kappa(&[1, 0]);
        assert_eq!(form.coefficient_at_m(1, &k).unwrap(), Complex64::new(1.0, 0.0));
        let six = form.coefficient_at_m(6, &k).unwrap();
        let expected = form.coefficient_at_prime(2, &k).unwrap() * form.coefficient_at_prime(3, &k).unwrap();
        assert_relative_eq!((six - expected).norm(), 0.0, epsilon = 1e-14);
        // m = 4: S_{2κ} at the point of 2, evaluated directly.
        let four = form.coefficient_at_m(4, &k).unwrap();
        let lambda = k.scaled(2).partition();
        assert_eq!(lambda.parts(), &[2, 2]);
        let direct = crate::symfunc::schur_eval_tableaux(&lambda, &form.point_at(2).unwrap().values()).unwrap();
        assert_relative_eq!((four - direct).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn table_matches_pointwise_queries() {
        let form = build_form(MeasureSpec::sato_tate(3), 9, 2000, ForcedZeros::residue(4, &[3])).unwrap();
        let k = kappa(&[1, 1]);
        let table = form.coefficient_table(&k, 2000).unwrap();
        for m in 1..=2000u64 {
            let direct = form.coefficient_at_m(m, &k).unwrap();
            assert!((table[m as usize] - direct).norm() <= 1e-12 * (1.0 + direct.norm()), "m = {m}");
        }
    }

    #[test]
    fn forms_are_deterministic() {
        let a = build_form(MeasureSpec::sato_tate(3), 42, 500, ForcedZeros::None).unwrap();
        let b = build_form(MeasureSpec::sato_tate(3), 42, 500, ForcedZeros::None).unwrap();
        let c = build_form(MeasureSpec::sato_tate(3), 43, 500, ForcedZeros::None).unwrap();
        let k = kappa(&[2, 1]);
        assert_eq!(a.coefficient_table(&k, 500).unwrap(), b.coefficient_table(&k, 500).unwrap());
        assert_ne!(a.coefficient_table(&k, 500).unwrap(), c.coefficient_table(&k, 500).unwrap());
    }

    #[test]
    fn all_primes_forced_leaves_only_powerful_numbers() {
        let form = build_form(MeasureSpec::sato_tate(3), 1, 100, ForcedZeros::All).unwrap();
        let k = kappa(&[1, 0]);
        let table = form.coefficient_table(&k, 100).unwrap();
        let nonzero: Vec<u64> = (1..=100).filter(|&m| table[m as usize].norm() >= NUMERIC_ZERO).collect();
        // Powerful numbers up to 100, enumerated by hand.
        assert_eq!(nonzero, vec![1, 4, 8, 9, 16, 25, 27, 32, 36, 49, 64, 72, 81, 100]);
    }
}
