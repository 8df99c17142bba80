use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::hecke::{SyntheticForm, NUMERIC_ZERO};
use crate::primes::{factorize_with, smallest_prime_factors};
use crate::symfunc::KappaIndex;
use crate::{Error, Result};

/// Constant `A` used for the (Ω1) and (Ω2(κ)) sieve hypotheses; (Ω1) needs `A > 2`.
pub const SIEVE_A: f64 = 3.0;

/// Outcome of the three sieve hypotheses for `ω(p) = 1_{p ∈ 𝓑}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypothesisFlags {
    pub a: f64,
    /// (Ω1): `0 <= ω(p)/p <= 1 - 1/A` for every `p <= X`.
    pub omega1: bool,
    pub omega1_max: f64,
    /// (Ω2(κ)): `Σ_{w<p<z} ω(p) log p / p <= A log(z/w) + A` for all `2 <= w < z <= X`.
    pub omega2: bool,
    /// Largest `Σ_{w<p<z} ω(p) log p/p - A log(z/w)` seen, compared against `A`.
    pub omega2_max_excess: f64,
    /// (R): `|R_d| <= ω(d)` with `R_d = ⌊X/d⌋ - X/d`, squarefree `d <= X` built from 𝓑-primes.
    pub remainder: bool,
    pub remainder_max: f64,
    pub remainder_terms: u64,
}

impl HypothesisFlags {
    pub fn all_pass(&self) -> bool {
        self.omega1 && self.omega2 && self.remainder
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SieveReport {
    pub x: u64,
    pub nonzero_count: u64,
    /// `X ∏_{p <= X, p ∈ 𝓑} (1 - 1/p)`.
    pub sieve_product: f64,
    /// `m <= X` with no 𝓑-prime `p < X` dividing `m`.
    pub s1_count: u64,
    /// `m <= X` with `g = (m, P_X) > 1` and `g² | m`.
    pub s2_count: u64,
    /// Nonzero indices outside `S1 ∪ S2`; the cover argument needs zero.
    pub cover_violations: u64,
    /// `#𝓑 ∩ [2, X]`.
    pub zero_primes: u64,
    pub hypotheses: HypothesisFlags,
}

impl SieveReport {
    pub fn ratio(&self) -> f64 {
        self.nonzero_count as f64 / self.sieve_product
    }
}

/// One checkpoint of [`nonvanishing_density_curve`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityRow {
    pub x: u64,
    pub nonzero_count: u64,
    pub sieve_product: f64,
    pub ratio: f64,
}

struct Tables {
    nonzero: Vec<bool>,
    /// 𝓑 membership by integer, for `p <= X`.
    in_b: Vec<bool>,
    spf: Vec<u32>,
}

fn tables(form: &SyntheticForm, kappa: &KappaIndex, x: u64) -> Result<Tables> {
    if x < 2 {
        return Err(Error::InvalidParameter(format!("x = {x} < 2")));
    }
    let table = form.coefficient_table(kappa, x)?;
    let nonzero: Vec<bool> = table.iter().map(|c| c.norm() >= NUMERIC_ZERO).collect();
    let mut in_b = vec![false; x as usize + 1];
    for &p in form.primes().iter().take_while(|&&p| p <= x) {
        in_b[p as usize] = !nonzero[p as usize];
    }
    Ok(Tables { nonzero, in_b, spf: smallest_prime_factors(x) })
}

fn sieve_product_at(in_b: &[bool], x: u64) -> f64 {
    (2..=x as usize)
        .filter(|&p| in_b[p])
        .fold(x as f64, |acc, p| acc * (1.0 - 1.0 / p as f64))
}

/// Nonvanishing count against the sieve product, with the two-set cover of
/// the nonzero indices and the sieve hypotheses checked for 𝓑 = `{p : A(p^κ) = 0}`.
pub fn sieve_report(form: &SyntheticForm, kappa: &KappaIndex, x: u64) -> Result<SieveReport> {
    let Tables { nonzero, in_b, spf } = tables(form, kappa, x)?;
    let mut report = SieveReport {
        x,
        nonzero_count: 0,
        sieve_product: sieve_product_at(&in_b, x),
        s1_count: 0,
        s2_count: 0,
        cover_violations: 0,
        zero_primes: in_b.iter().filter(|&&b| b).count() as u64,
        hypotheses: hypotheses(&in_b, x),
    };
    for (m, &is_nonzero) in nonzero.iter().enumerate().skip(1) {
        let mut in_s1 = true;
        // g = (m, P_X) is squarefree, so g² | m iff every 𝓑-prime divides m at least twice.
        let mut has_b = false;
        let mut all_squared = true;
        for (p, e) in factorize_with(&spf, m) {
            if in_b[p as usize] {
                has_b = true;
                all_squared &= e >= 2;
                if p < x {
                    in_s1 = false;
                }
            }
        }
        let in_s2 = has_b && all_squared;
        report.s1_count += in_s1 as u64;
        report.s2_count += in_s2 as u64;
        if is_nonzero {
            report.nonzero_count += 1;
            if !(in_s1 || in_s2) {
                report.cover_violations += 1;
            }
        }
    }
    Ok(report)
}

fn hypotheses(in_b: &[bool], x: u64) -> HypothesisFlags {
    let a = SIEVE_A;
    let primes: Vec<u64> = (2..=x).filter(|&p| crate::primes::is_prime(p)).collect();

    let omega_ratios = primes.iter().map(|&p| if in_b[p as usize] { 1.0 / p as f64 } else { 0.0 });
    let omega1 = omega_ratios.clone().all(|r| (0.0..=1.0 - 1.0 / a).contains(&r));
    let omega1_max = omega_ratios.fold(0.0, f64::max);

    // With S(q) = Σ_{p <= q} ω(p) log p / p, the supremum over real w < z of
    // Σ_{w<p<z} ... - A log(z/w) is attained with z just above a prime q_j and
    // w just below a prime q_i <= q_j (or w -> 2⁻ when nothing is excluded):
    // S(q_j) - S(q_{i-1}) - A log(q_j / q_i).
    let mut s_prev = 0.0; // S(q_{i-1})
    let mut best_left = f64::NEG_INFINITY; // max over i <= j of A log q_i - S(q_{i-1})
    let mut max_excess = f64::NEG_INFINITY;
    for &q in &primes {
        let lq = (q as f64).ln();
        best_left = best_left.max(a * lq - s_prev);
        let s_here = s_prev + if in_b[q as usize] { lq / q as f64 } else { 0.0 };
        max_excess = max_excess.max(s_here - a * lq + best_left);
        s_prev = s_here;
    }
    let max_excess = if max_excess.is_finite() { max_excess } else { 0.0 };
    let omega2 = max_excess <= a;

    // Squarefree d <= X composed of 𝓑-primes.
    let b_primes: Vec<u64> = primes.iter().copied().filter(|&p| in_b[p as usize]).collect();
    let mut remainder_max: f64 = 0.0;
    let mut remainder_terms = 0u64;
    let mut remainder = true;
    let mut stack = vec![(1u64, 0usize)];
    while let Some((d, start)) = stack.pop() {
        remainder_terms += 1;
        let r = (x % d) as f64 / d as f64;
        remainder_max = remainder_max.max(r);
        // |R_d| = (X mod d)/d and ω(d) = 1 for such d.
        remainder &= x % d <= d;
        for (i, &p) in b_primes.iter().enumerate().skip(start) {
            match d.checked_mul(p) {
                Some(next) if next <= x => stack.push((next, i + 1)),
                _ => break,
            }
        }
    }

    HypothesisFlags {
        a,
        omega1,
        omega1_max,
        omega2,
        omega2_max_excess: max_excess,
        remainder,
        remainder_max,
        remainder_terms,
    }
}

/// `(x_i, nonzero count, sieve product, ratio)` at each checkpoint `x_i <= x`.
pub fn nonvanishing_density_curve(
    form: &SyntheticForm,
    kappa: &KappaIndex,
    x: u64,
    checkpoints: &[u64],
) -> Result<Vec<DensityRow>> {
    if let Some(&bad) = checkpoints.iter().find(|&&c| c > x || c < 1) {
        return Err(Error::InvalidParameter(format!("checkpoint {bad} outside [1, {x}]")));
    }
    let Tables { nonzero, in_b, .. } = tables(form, kappa, x)?;
    let mut cumulative = vec![0u64; x as usize + 1];
    let mut product = vec![1.0f64; x as usize + 1];
    for m in 1..=x as usize {
        cumulative[m] = cumulative[m - 1] + nonzero[m] as u64;
        product[m] = product[m - 1] * if in_b[m] { 1.0 - 1.0 / m as f64 } else { 1.0 };
    }
    Ok(checkpoints
        .iter()
        .map(|&c| {
            let sieve_product = c as f64 * product[c as usize];
            let nonzero_count = cumulative[c as usize];
            DensityRow { x: c, nonzero_count, sieve_product, ratio: nonzero_count as f64 / sieve_product }
        })
        .collect())
}

pub fn write_density_csv<W: Write>(mut out: W, rows: &[DensityRow]) -> io::Result<()> {
    writeln!(out, "x,nonzero_count,sieve_product,ratio")?;
    for r in rows {
        writeln!(out, "{},{},{},{}", r.x, r.nonzero_count, r.sieve_product, r.ratio)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::{build_form, ForcedZeros};
    use crate::measures::MeasureSpec;
    use approx::assert_relative_eq;

    fn k(v: &[u32]) -> KappaIndex {
        KappaIndex::from_slice(v).unwrap()
    }

    fn form(forced: ForcedZeros, bound: u64) -> SyntheticForm {
        build_form(MeasureSpec::sato_tate(3), 17, bound, forced).unwrap()
    }

    #[test]
    fn sieve_product_of_two_primes() {
        let r = sieve_report(&form(ForcedZeros::list([2, 3]), 10), &k(&[1, 0]), 10).unwrap();
        assert_relative_eq!(r.sieve_product, 10.0 / 3.0, epsilon = 1e-12);
        assert_eq!(r.zero_primes, 2);
    }

    #[test]
    fn cover_sets_for_b_equal_two() {
        let r = sieve_report(&form(ForcedZeros::list([2]), 10), &k(&[1, 0]), 10).unwrap();
        // S1 = {1,3,5,7,9}, S2 = {4,8}.
        assert_eq!(r.s1_count, 5);
        assert_eq!(r.s2_count, 2);
        assert_eq!(r.cover_violations, 0);
        // 2, 6, 10 vanish; everything else is nonzero.
        assert_eq!(r.nonzero_count, 7);
        assert!(r.hypotheses.all_pass());
    }

    #[test]
    fn empty_b_curve_is_identically_one() {
        let f = form(ForcedZeros::None, 10_000);
        let rows = nonvanishing_density_curve(&f, &k(&[1, 0]), 10_000, &[10, 100, 1000, 10_000]).unwrap();
        for r in rows {
            assert_eq!(r.nonzero_count, r.x);
            assert_eq!(r.ratio, 1.0);
        }
    }

    #[test]
    fn all_primes_forced_small_x() {
        let f = form(ForcedZeros::All, 100);
        let r = sieve_report(&f, &k(&[1, 0]), 100).unwrap();
        // Powerful numbers <= 100.
        assert_eq!(r.nonzero_count, 14);
        assert_eq!(r.cover_violations, 0);
        assert_eq!(r.s1_count, 1);
        let rows = nonvanishing_density_curve(&f, &k(&[1, 0]), 100, &[100]).unwrap();
        assert_eq!(rows[0].nonzero_count, 14);
    }

    #[test]
    fn csv_header() {
        let mut buf = Vec::new();
        write_density_csv(&mut buf, &[DensityRow { x: 10, nonzero_count: 7, sieve_product: 5.0, ratio: 1.4 }]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "x,nonzero_count,sieve_product,ratio\n10,7,5,1.4\n");
    }
}
