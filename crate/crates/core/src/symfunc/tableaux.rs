//! Semistandard Young tableaux and monomial expansions of Schur polynomials.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::Partition;

/// Visits every semistandard tableau of shape `shape` with entries in `1..=n`.
///
/// Tableaux are produced row by row, left to right, in lexicographic order of
/// their row-reading words. Each cell's admissible range is bounded below by
/// its left and upper neighbours and above by `n` minus the number of cells
/// below it in its column.
pub fn for_each_ssyt<F: FnMut(&[Vec<u8>])>(shape: &Partition, n: usize, mut visit: F) {
    if shape.len() > n {
        return;
    }
    let rows: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let col_len: Vec<usize> = shape.conjugate().parts().iter().map(|&c| c as usize).collect();
    let mut tableau: Vec<Vec<u8>> = rows.iter().map(|&len| vec![0u8; len]).collect();
    let cells: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();

    fn fill<F: FnMut(&[Vec<u8>])>(
        idx: usize,
        cells: &[(usize, usize)],
        col_len: &[usize],
        n: usize,
        t: &mut Vec<Vec<u8>>,
        visit: &mut F,
    ) {
        let Some(&(r, c)) = cells.get(idx) else {
            visit(t);
            return;
        };
        let left = if c > 0 { t[r][c - 1] } else { 1 };
        let above = if r > 0 { t[r - 1][c] + 1 } else { 1 };
        let lo = left.max(above) as usize;
        let hi = n - (col_len[c] - 1 - r);
        for v in lo..=hi {
            t[r][c] = v as u8;
            fill(idx + 1, cells, col_len, n, t, visit);
        }
    }

    fill(0, &cells, &col_len, n, &mut tableau, &mut visit);
}

/// Exponent vector `(#1's, …, #n's)` of a tableau.
pub fn content(tableau: &[Vec<u8>], n: usize) -> Vec<u32> {
    let mut c = vec![0u32; n];
    for row in tableau {
        for &v in row {
            c[v as usize - 1] += 1;
        }
    }
    c
}

/// Number of semistandard tableaux of shape `shape` with entries `<= n`, by enumeration.
pub fn ssyt_count(shape: &Partition, n: usize) -> BigUint {
    let mut count = 0u64;
    for_each_ssyt(shape, n, |_| count += 1);
    BigUint::from(count)
}

/// Monomial expansion of `s_shape(x_1, …, x_n)` gathered from explicit tableau enumeration.
pub fn monomials_by_enumeration(shape: &Partition, n: usize) -> BTreeMap<Vec<u32>, BigUint> {
    let mut out: BTreeMap<Vec<u32>, BigUint> = BTreeMap::new();
    for_each_ssyt(shape, n, |t| {
        *out.entry(content(t, n)).or_insert_with(BigUint::zero) += 1u32;
    });
    out
}

/// Monomial expansion of `s_shape(x_1, …, x_n)` by the branching rule
/// `s_λ(x_1..x_k) = Σ_{μ ≺ λ} s_μ(x_1..x_{k-1}) x_k^{|λ|-|μ|}`, where `μ ≺ λ`
/// ranges over partitions interlacing `λ`. Each term of the recursion is one
/// tableau's chain of shapes, so this is the same sum of monomials over
/// semistandard tableaux, grouped by content.
pub fn monomials_by_branching(shape: &Partition, n: usize) -> BTreeMap<Vec<u32>, BigUint> {
    let mut memo: HashMap<(usize, Vec<u32>), BTreeMap<Vec<u32>, BigUint>> = HashMap::new();
    if shape.len() > n {
        return BTreeMap::new();
    }
    branch(n, shape.padded(n), &mut memo)
}

type Monomials = BTreeMap<Vec<u32>, BigUint>;

fn branch(k: usize, lambda: Vec<u32>, memo: &mut HashMap<(usize, Vec<u32>), Monomials>) -> Monomials {
    if k == 0 {
        let mut m = BTreeMap::new();
        m.insert(Vec::new(), BigUint::one());
        return m;
    }
    if let Some(hit) = memo.get(&(k, lambda.clone())) {
        return hit.clone();
    }
    let weight: u32 = lambda.iter().sum();
    let mut out: BTreeMap<Vec<u32>, BigUint> = BTreeMap::new();
    // μ has k-1 parts with λ_{i+1} <= μ_i <= λ_i.
    let mut mu = vec![0u32; k - 1];
    fn interlace(
        i: usize,
        lambda: &[u32],
        mu: &mut Vec<u32>,
        acc: &mut Vec<Vec<u32>>,
    ) {
        if i == mu.len() {
            acc.push(mu.clone());
            return;
        }
        for v in lambda[i + 1]..=lambda[i] {
            mu[i] = v;
            interlace(i + 1, lambda, mu, acc);
        }
    }
    let mut mus = Vec::new();
    interlace(0, &lambda, &mut mu, &mut mus);
    for mu in mus {
        let last = weight - mu.iter().sum::<u32>();
        let sub = branch(k - 1, mu, memo);
        for (exps, count) in sub {
            let mut e = exps;
            e.push(last);
            *out.entry(e).or_insert_with(BigUint::zero) += count;
        }
    }
    memo.insert((k, lambda), out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(ssyt_count(&p(&[2, 1]), 3), BigUint::from(8u32));
        assert_eq!(ssyt_count(&p(&[1, 1]), 3), BigUint::from(3u32));
        assert_eq!(ssyt_count(&Partition::empty(), 3), BigUint::from(1u32));
        assert_eq!(ssyt_count(&p(&[1, 1, 1, 1]), 3), BigUint::from(0u32));
    }

    #[test]
    fn enumeration_order_is_lexicographic_by_rows() {
        let mut words = Vec::new();
        for_each_ssyt(&p(&[2, 1]), 3, |t| words.push(t.concat()));
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert_eq!(words.first().unwrap(), &vec![1, 1, 2]);
        assert_eq!(words.last().unwrap(), &vec![2, 3, 3]);
    }

    #[test]
    fn branching_matches_enumeration() {
        for n in 1..=4 {
            for w in 0..=6 {
                for shape in Partition::all_of_weight(w, n) {
                    assert_eq!(
                        monomials_by_branching(&shape, n),
                        monomials_by_enumeration(&shape, n),
                        "shape {shape}, n = {n}"
                    );
                }
            }
        }
    }
}
