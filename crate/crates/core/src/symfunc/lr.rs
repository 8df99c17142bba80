use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::Zero;

use super::{Partition, SchurExpansion};
use crate::{Error, Result};

/// Littlewood–Richardson expansion `s_λ s_μ = Σ c^ν_{λμ} s_ν`, restricted to
/// `ν` with at most `max_rows` rows.
///
/// Enumerates LR tableaux of shape `ν/λ` and content `μ`: the `μ_i` boxes
/// labelled `i` form a horizontal strip, and the reverse row reading word is a
/// lattice word. Rows past `max_rows` are never filled, which prunes exactly
/// the `ν` discarded by the restriction.
pub fn littlewood_richardson(lambda: &Partition, mu: &Partition, max_rows: usize) -> BTreeMap<Partition, BigUint> {
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    if lambda.len() <= max_rows && mu.len() <= max_rows {
        let mut state = LrState {
            rows: max_rows,
            content: mu.parts().to_vec(),
            shape: lambda.padded(max_rows),
            placed: vec![vec![0; max_rows]; mu.len()],
        };
        state.place_label(0, &mut counts);
    }
    counts
        .into_iter()
        .map(|(nu, c)| (Partition::from_sorted_unchecked(nu), BigUint::from(c)))
        .collect()
}

struct LrState {
    rows: usize,
    content: Vec<u32>,
    shape: Vec<u32>,
    /// `placed[label][row]`: boxes with that label in that row.
    placed: Vec<Vec<u32>>,
}

impl LrState {
    fn place_label(&mut self, label: usize, out: &mut HashMap<Vec<u32>, u64>) {
        if label == self.content.len() {
            *out.entry(self.shape.clone()).or_insert(0) += 1;
            return;
        }
        let before = self.shape.clone();
        self.place_row(label, 0, self.content[label], 0, &before, out);
    }

    /// Distributes the remaining boxes of `label` over rows `row..`.
    /// `running` is the number of `label` boxes already placed in rows above.
    fn place_row(
        &mut self,
        label: usize,
        row: usize,
        remaining: u32,
        running: u32,
        before: &[u32],
        out: &mut HashMap<Vec<u32>, u64>,
    ) {
        if remaining == 0 {
            self.place_label(label + 1, out);
            return;
        }
        if row == self.rows {
            return;
        }
        // Horizontal strip: the new row may not pass the old row above it.
        let strip_cap = if row == 0 { remaining } else { before[row - 1] - before[row] };
        // Lattice word: label boxes read so far never outnumber label-1 boxes
        // in strictly higher rows.
        let lattice_cap = if label == 0 {
            remaining
        } else {
            let prev: u32 = self.placed[label - 1][..row].iter().sum();
            prev.saturating_sub(running)
        };
        let cap = remaining.min(strip_cap).min(lattice_cap);
        for k in (0..=cap).rev() {
            self.shape[row] += k;
            self.placed[label][row] = k;
            self.place_row(label, row + 1, remaining - k, running + k, before, out);
            self.shape[row] -= k;
            self.placed[label][row] = 0;
        }
    }
}

/// Rewrites `Σ c_λ s_λ` on the torus `x_1⋯x_n = 1`: terms with more than `n`
/// rows vanish and each full column of height `n` is stripped (`e_n = 1`).
pub fn reduce_mod_determinant<I>(terms: I, n: usize) -> SchurExpansion
where
    I: IntoIterator<Item = (Partition, BigUint)>,
{
    let mut out: BTreeMap<Partition, BigUint> = BTreeMap::new();
    for (lambda, c) in terms {
        if lambda.len() > n || c.is_zero() {
            continue;
        }
        let floor = lambda.part(n - 1);
        let stripped = Partition::from_sorted_unchecked(lambda.parts().iter().map(|&p| p - floor).collect());
        *out.entry(stripped).or_insert_with(BigUint::zero) += c;
    }
    SchurExpansion::from_reduced(n, out)
}

/// `s_λ · s_μ` in `n` variables, reduced modulo `x_1⋯x_n = 1`.
pub fn schur_multiply(lambda: &Partition, mu: &Partition, n: usize) -> Result<SchurExpansion> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    for p in [lambda, mu] {
        if p.len() > n {
            return Err(Error::TooManyParts { partition: p.to_string(), n });
        }
    }
    Ok(reduce_mod_determinant(littlewood_richardson(lambda, mu, n), n))
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
    fn unrestricted_lr_examples() {
        let raw = littlewood_richardson(&p(&[1, 1]), &p(&[1, 1]), 8);
        let got: Vec<_> = raw.iter().map(|(p, c)| (p.parts().to_vec(), c.clone())).collect();
        assert_eq!(
            got,
            vec![
                (vec![1, 1, 1, 1], BigUint::from(1u32)),
                (vec![2, 1, 1], BigUint::from(1u32)),
                (vec![2, 2], BigUint::from(1u32)),
            ]
        );
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2
        let raw = littlewood_richardson(&p(&[2, 1]), &p(&[2, 1]), 8);
        assert_eq!(raw[&p(&[3, 2, 1])], BigUint::from(2u32));
        // (4,2), (4,1,1), (3,3), 2·(3,2,1), (3,1,1,1), (2,2,2), (2,2,1,1)
        assert_eq!(raw.len(), 7);
        assert_eq!(raw.values().sum::<BigUint>(), BigUint::from(8u32));
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(terms(&schur_multiply(&p(&[1]), &p(&[1]), 3).unwrap()), vec![(vec![1, 1], 1), (vec![2], 1)]);
        assert_eq!(terms(&schur_multiply(&p(&[1, 1]), &p(&[1, 1]), 3).unwrap()), vec![(vec![1], 1), (vec![2, 2], 1)]);
        let lam = p(&[3, 1]);
        assert_eq!(terms(&schur_multiply(&Partition::empty(), &lam, 3).unwrap()), vec![(vec![3, 1], 1)]);
        assert!(schur_multiply(&p(&[1, 1, 1, 1]), &p(&[1]), 3).is_err());
    }

    #[test]
    fn reduction_examples() {
        let one = || BigUint::from(1u32);
        assert_eq!(terms(&reduce_mod_determinant([(p(&[1, 1, 1]), one())], 3)), vec![(vec![], 1)]);
        assert_eq!(terms(&reduce_mod_determinant([(p(&[2, 1, 1]), one())], 3)), vec![(vec![1], 1)]);
        assert!(reduce_mod_determinant([(p(&[1, 1, 1, 1]), one())], 3).is_empty());
    }
}
