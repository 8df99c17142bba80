//! Streaming moments and two-sample statistics.

use num_complex::Complex64;

/// Running mean and sum of squared deviations of complex samples.
///
/// Merging is Chan's pairwise update, so partial accumulators over disjoint
/// chunks combine to the same value when merged in a fixed order.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Moments {
    pub count: u64,
    pub mean: Complex64,
    /// Σ |x - mean|².
    pub m2: f64,
}

impl Moments {
    pub fn push(&mut self, x: Complex64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        let delta2 = x - self.mean;
        self.m2 += delta.re * delta2.re + delta.im * delta2.im;
    }

    pub fn merge(&mut self, other: &Moments) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = *other;
            return;
        }
        let total = self.count + other.count;
        let delta = other.mean - self.mean;
        let w = other.count as f64 / total as f64;
        self.mean += delta * w;
        self.m2 += other.m2 + delta.norm_sqr() * self.count as f64 * w;
        self.count = total;
    }

    /// Unbiased sample variance of |x - mean|.
    pub fn variance(&self) -> f64 {
        if self.count < 2 {
            0.0
        } else {
            self.m2 / (self.count - 1) as f64
        }
    }

    pub fn stderr(&self) -> f64 {
        if self.count < 2 {
            0.0
        } else {
            (self.variance() / self.count as f64).sqrt()
        }
    }
}

/// Two-sample Kolmogorov–Smirnov statistic `sup |F_a - F_b|`.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> f64 {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0, 0);
    let mut d: f64 = 0.0;
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

/// Asymptotic two-sample KS critical value at level `alpha`:
/// `sqrt(-ln(alpha/2)/2) * sqrt((n+m)/(n m))`.
pub fn ks_critical_value(alpha: f64, n: usize, m: usize) -> f64 {
    let c = (-(alpha / 2.0).ln() / 2.0).sqrt();
    let (n, m) = (n as f64, m as f64);
    c * ((n + m) / (n * m)).sqrt()
}

/// Total-variation distance between two probability vectors.
pub fn total_variation(p: &[f64], q: &[f64]) -> f64 {
    0.5 * p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn merged_moments_match_single_pass() {
        let xs: Vec<Complex64> = (0..1000)
            .map(|i| Complex64::new((i as f64 * 0.37).sin(), (i as f64 * 0.11).cos()))
            .collect();
        let mut whole = Moments::default();
        xs.iter().for_each(|&x| whole.push(x));

        let mut merged = Moments::default();
        for chunk in xs.chunks(77) {
            let mut part = Moments::default();
            chunk.iter().for_each(|&x| part.push(x));
            merged.merge(&part);
        }
        assert_eq!(merged.count, 1000);
        assert_relative_eq!(merged.mean.re, whole.mean.re, epsilon = 1e-13);
        assert_relative_eq!(merged.mean.im, whole.mean.im, epsilon = 1e-13);
        assert_relative_eq!(merged.m2, whole.m2, max_relative = 1e-12);

        let mean: Complex64 = xs.iter().sum::<Complex64>() / 1000.0;
        let m2: f64 = xs.iter().map(|x| (x - mean).norm_sqr()).sum();
        assert_relative_eq!(whole.m2, m2, max_relative = 1e-12);
    }

    #[test]
    fn constant_samples_have_zero_stderr() {
        let mut m = Moments::default();
        for _ in 0..10 {
            m.push(Complex64::new(1.0, 0.0));
        }
        assert_eq!(m.mean, Complex64::new(1.0, 0.0));
        assert_eq!(m.stderr(), 0.0);
    }

    #[test]
    fn ks_statistic_small_cases() {
        assert_eq!(ks_two_sample(&[1.0, 2.0], &[1.0, 2.0]), 0.0);
        assert_eq!(ks_two_sample(&[1.0, 2.0], &[3.0, 4.0]), 1.0);
        assert_relative_eq!(ks_two_sample(&[1.0, 3.0], &[2.0, 4.0]), 0.5);
        assert_relative_eq!(ks_critical_value(0.01, 100, 100), 1.6276 * 0.1414213, epsilon = 1e-4);
    }
}
