use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

use super::tableaux::monomials_by_enumeration;
use super::{reduce_mod_determinant, Partition, SchurExpansion};
use crate::{Error, Result};

pub const DEFAULT_ORACLE_GUARD: u32 = 12;

/// Independent check of [`super::schur_multiply`]: expands both factors into
/// monomials by enumerating tableaux, multiplies the polynomials, and peels
/// off Schur functions by repeatedly subtracting the lexicographically
/// leading monomial.
pub fn lr_bruteforce_oracle(lambda: &Partition, mu: &Partition, n: usize) -> Result<SchurExpansion> {
    lr_bruteforce_oracle_with_guard(lambda, mu, n, DEFAULT_ORACLE_GUARD)
}

pub fn lr_bruteforce_oracle_with_guard(lambda: &Partition, mu: &Partition, n: usize, guard: u32) -> Result<SchurExpansion> {
    let weight = lambda.weight() + mu.weight();
    if weight > guard {
        return Err(Error::GuardExceeded { weight, guard });
    }
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    for p in [lambda, mu] {
        if p.len() > n {
            return Err(Error::TooManyParts { partition: p.to_string(), n });
        }
    }

    let a = monomials_by_enumeration(lambda, n);
    let b = monomials_by_enumeration(mu, n);
    let mut product: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for (ea, ca) in &a {
        for (eb, cb) in &b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *product.entry(e).or_insert_with(BigInt::zero) += BigInt::from(ca * cb);
        }
    }
    product.retain(|_, c| !c.is_zero());

    let mut schur_monomials: HashMap<Partition, BTreeMap<Vec<u32>, BigUint>> = HashMap::new();
    let mut found: Vec<(Partition, BigUint)> = Vec::new();
    while let Some((lead, coeff)) = product.last_key_value() {
        let lead = lead.clone();
        let coeff = coeff.clone();
        assert!(
            lead.windows(2).all(|w| w[0] >= w[1]) && coeff.sign() == Sign::Plus,
            "leading monomial {lead:?} with coefficient {coeff} is not a dominant positive term"
        );
        let nu = Partition::from_sorted_unchecked(lead);
        let monos = schur_monomials
            .entry(nu.clone())
            .or_insert_with(|| monomials_by_enumeration(&nu, n));
        for (e, c) in monos.iter() {
            let entry = product.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry -= &coeff * BigInt::from(c.clone());
            if entry.is_zero() {
                product.remove(e);
            }
        }
        found.push((nu, coeff.to_biguint().expect("positive")));
    }
    Ok(reduce_mod_determinant(found, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn terms(e: &SchurExpansion) -> Vec<(Vec<u32>, u64)> {
        e.iter().map(|(p, c)| (p.parts().to_vec(), c.try_into().unwrap())).collect()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(terms(&lr_bruteforce_oracle(&p(&[1]), &p(&[1]), 2).unwrap()), vec![(vec![], 1), (vec![2], 1)]);
        assert_eq!(terms(&lr_bruteforce_oracle(&p(&[2]), &p(&[1]), 3).unwrap()), vec![(vec![2, 1], 1), (vec![3], 1)]);
        assert_eq!(
            terms(&lr_bruteforce_oracle(&Partition::empty(), &Partition::empty(), 3).unwrap()),
            vec![(vec![], 1)]
        );
    }

    #[test]
    fn guard_is_enforced() {
        let big = p(&[7]);
        assert!(matches!(
            lr_bruteforce_oracle(&big, &p(&[6]), 3),
            Err(Error::GuardExceeded { weight: 13, guard: 12 })
        ));
    }
}
