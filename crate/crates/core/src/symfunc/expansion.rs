use std::collections::BTreeMap;
use std::io::{self, Write};

use num_bigint::BigUint;
use num_traits::Zero;

use super::{partition_to_kappa, KappaIndex, Partition};

/// A finite non-negative integer combination `Σ c_ξ s_ξ` on the torus
/// `x_1⋯x_n = 1`, indexed by reduced partitions (at most `n - 1` parts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    n: usize,
    terms: BTreeMap<Partition, BigUint>,
}

impl SchurExpansion {
    pub(crate) fn from_reduced(n: usize, terms: BTreeMap<Partition, BigUint>) -> Self {
        debug_assert!(terms.iter().all(|(p, c)| p.len() < n && !c.is_zero()));
        SchurExpansion { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigUint {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Coefficient of the constant polynomial `s_∅ = 1`.
    pub fn constant_term(&self) -> BigUint {
        self.coefficient(&Partition::empty())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.terms.iter()
    }

    /// Terms re-indexed by κ and sorted by `(‖ξ‖, ξ)`.
    pub fn by_kappa(&self) -> Vec<(KappaIndex, BigUint)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(p, c)| {
                let xi = partition_to_kappa(p, self.n).expect("reduced partitions fit in n rows");
                (xi, c.clone())
            })
            .collect();
        out.sort_by(|(a, _), (b, _)| a.norm().cmp(&b.norm()).then_with(|| a.entries().cmp(b.entries())));
        out
    }

    /// Writes the `xi,coefficient` CSV dump.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "xi,coefficient")?;
        for (xi, c) in self.by_kappa() {
            writeln!(out, "{},{}", xi.dashed(), c)?;
        }
        Ok(())
    }
}
