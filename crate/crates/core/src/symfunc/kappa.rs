use std::fmt;

use serde::{Deserialize, Serialize};

use super::Partition;
use crate::{Error, Result};

/// The `(n-1)`-tuple κ indexing `A(p^κ) = A(p^{κ_1}, …, p^{κ_{n-1}})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KappaIndex {
    n: usize,
    kappa: Vec<u32>,
}

impl KappaIndex {
    pub fn new(n: usize, kappa: Vec<u32>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        if kappa.len() != n - 1 {
            return Err(Error::KappaLength { n, expected: n - 1, got: kappa.len() });
        }
        Ok(KappaIndex { n, kappa })
    }

    /// Rank inferred from the tuple length.
    pub fn from_slice(kappa: &[u32]) -> Result<Self> {
        KappaIndex::new(kappa.len() + 1, kappa.to_vec())
    }

    pub fn zero(n: usize) -> Result<Self> {
        KappaIndex::new(n, vec![0; n.saturating_sub(1)])
    }

    /// Parses a comma-separated tuple such as `"1,0"`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let kappa = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidParameter(format!("bad kappa entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        KappaIndex::new(n, kappa)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[u32] {
        &self.kappa
    }

    pub fn is_zero(&self) -> bool {
        self.kappa.iter().all(|&k| k == 0)
    }

    /// `‖κ‖ = Σ_j (n - j) κ_j`.
    pub fn norm(&self) -> u32 {
        self.kappa
            .iter()
            .enumerate()
            .map(|(j, &k)| (self.n - 1 - j) as u32 * k)
            .sum()
    }

    /// `|κ| = Σ_j κ_j`.
    pub fn size(&self) -> u32 {
        self.kappa.iter().sum()
    }

    pub fn dual(&self) -> KappaIndex {
        let mut kappa = self.kappa.clone();
        kappa.reverse();
        KappaIndex { n: self.n, kappa }
    }

    pub fn is_palindromic(&self) -> bool {
        self.kappa.iter().eq(self.kappa.iter().rev())
    }

    /// Componentwise scaling `e·κ`, the index of `A((p^e)^κ)`.
    pub fn scaled(&self, e: u32) -> KappaIndex {
        KappaIndex { n: self.n, kappa: self.kappa.iter().map(|&k| k * e).collect() }
    }

    pub fn partition(&self) -> Partition {
        partition_from_kappa(self)
    }

    /// Dash-separated form used in CSV dumps, e.g. `2-0`.
    pub fn dashed(&self) -> String {
        self.kappa.iter().map(u32::to_string).collect::<Vec<_>>().join("-")
    }

    /// Every κ of rank `n` with `|κ| <= max_size`, ordered by size then lexicographically.
    pub fn all_up_to(n: usize, max_size: u32) -> Result<Vec<KappaIndex>> {
        fn go(slots: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if slots == 0 {
                out.push(cur.clone());
                return;
            }
            for k in 0..=rest {
                cur.push(k);
                go(slots - 1, rest - k, cur, out);
                cur.pop();
            }
        }
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        let mut raw = Vec::new();
        go(n - 1, max_size, &mut Vec::new(), &mut raw);
        raw.sort_by(|a, b| a.iter().sum::<u32>().cmp(&b.iter().sum::<u32>()).then_with(|| a.cmp(b)));
        raw.into_iter().map(|k| KappaIndex::new(n, k)).collect()
    }
}

impl fmt::Display for KappaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.kappa.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `λ_i = Σ_{l=1}^{n-i} κ_l`: the numerator exponents of the alternant minus
/// the staircase `(n-1, …, 1, 0)`.
pub fn partition_from_kappa(kappa: &KappaIndex) -> Partition {
    let n = kappa.n();
    let parts = (1..=n)
        .map(|i| kappa.entries()[..n - i].iter().sum::<u32>())
        .collect();
    Partition::from_sorted_unchecked(parts)
}

/// Inverse of [`partition_from_kappa`] after stripping full columns of height `n`.
pub fn partition_to_kappa(lambda: &Partition, n: usize) -> Result<KappaIndex> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    if lambda.len() > n {
        return Err(Error::TooManyParts { partition: lambda.to_string(), n });
    }
    let floor = lambda.part(n - 1);
    let stripped: Vec<u32> = (0..n).map(|i| lambda.part(i) - floor).collect();
    // κ_j = λ_{n-j} - λ_{n-j+1} in 1-based indexing.
    let kappa = (1..n).map(|j| stripped[n - j - 1] - stripped[n - j]).collect();
    KappaIndex::new(n, kappa)
}

pub fn kappa_dual(kappa: &KappaIndex) -> KappaIndex {
    kappa.dual()
}
