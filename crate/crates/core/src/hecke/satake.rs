use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Satake parameters `e^{iθ_1}, …, e^{iθ_n}` at one prime, with `Σ θ_j ≡ 0 (mod 2π)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SatakePoint {
    angles: Vec<f64>,
}

fn wrap(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t >= TAU { 0.0 } else { t }
}

impl SatakePoint {
    /// Builds a point of rank `n` from `n - 1` free angles or all `n` angles.
    /// The last angle is always recomputed as `-(θ_1 + ⋯ + θ_{n-1})`.
    pub fn from_angles(n: usize, angles: &[f64]) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        if angles.len() != n && angles.len() != n - 1 {
            return Err(Error::InvalidParameter(format!(
                "rank {n} needs {} or {n} angles, got {}",
                n - 1,
                angles.len()
            )));
        }
        if let Some(bad) = angles.iter().find(|a| !a.is_finite()) {
            return Err(Error::InvalidParameter(format!("angle {bad} is not finite")));
        }
        let mut free: Vec<f64> = angles[..n - 1].iter().map(|&a| wrap(a)).collect();
        let last = wrap(-free.iter().sum::<f64>());
        free.push(last);
        Ok(SatakePoint { angles: free })
    }

    pub fn identity(n: usize) -> Result<Self> {
        SatakePoint::from_angles(n, &vec![0.0; n - 1])
    }

    pub fn n(&self) -> usize {
        self.angles.len()
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn values(&self) -> Vec<Complex64> {
        self.angles.iter().map(|&t| Complex64::from_polar(1.0, t)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn last_angle_is_recomputed() {
        let p = SatakePoint::from_angles(3, &[0.1, 0.2, 5.0]).unwrap();
        assert_relative_eq!(p.angles()[2], TAU - 0.3, epsilon = 1e-14);
        let prod: Complex64 = p.values().iter().product();
        assert_relative_eq!((prod - Complex64::new(1.0, 0.0)).norm(), 0.0, epsilon = 1e-12);
        assert!(p.values().iter().all(|v| (v.norm() - 1.0).abs() < 1e-15));
    }

    #[test]
    fn angles_are_wrapped_and_validated() {
        let p = SatakePoint::from_angles(2, &[-1.0]).unwrap();
        assert!(p.angles().iter().all(|&a| (0.0..TAU).contains(&a)));
        assert!(SatakePoint::from_angles(3, &[0.1]).is_err());
        assert!(SatakePoint::from_angles(3, &[0.1, f64::NAN]).is_err());
        assert!(SatakePoint::from_angles(1, &[]).is_err());
    }
}
