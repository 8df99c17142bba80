//! Prime sieves and factorization helpers.

/// All primes `p <= limit`, by the sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Smallest-prime-factor table for `0..=limit` (entries 0 and 1 are 0).
pub fn smallest_prime_factors(limit: u64) -> Vec<u32> {
    let limit = limit as usize;
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] != 0 {
            continue;
        }
        let mut j = i;
        while j <= limit {
            if spf[j] == 0 {
                spf[j] = i as u32;
            }
            j += i;
        }
    }
    spf
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization `m = ∏ p^e` in ascending order of `p`.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Factorization via a precomputed smallest-prime-factor table.
pub fn factorize_with(spf: &[u32], mut m: usize) -> impl Iterator<Item = (u64, u32)> + '_ {
    std::iter::from_fn(move || {
        if m <= 1 {
            return None;
        }
        let p = spf[m] as usize;
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        Some((p as u64, e))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_counts() {
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_up_to(100_000).len(), 9592);
    }

    #[test]
    fn factorizations_agree() {
        let spf = smallest_prime_factors(5000);
        for m in 1..=5000u64 {
            let a = factorize(m);
            let b: Vec<_> = factorize_with(&spf, m as usize).collect();
            assert_eq!(a, b, "m = {m}");
            assert_eq!(a.iter().map(|&(p, e)| p.pow(e)).product::<u64>(), m);
            assert_eq!(is_prime(m), a.len() == 1 && a[0].1 == 1);
        }
    }
}
