use serde::{Deserialize, Serialize};

use crate::hecke::{SyntheticForm, NUMERIC_ZERO};
use crate::symfunc::KappaIndex;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct SignSummary {
    pub x: u64,
    pub positives: u64,
    pub negatives: u64,
    pub zeros: u64,
    /// Adjacent pairs of opposite sign in the subsequence of nonzero terms.
    pub sign_changes: u64,
}

impl SignSummary {
    pub fn nonzero(&self) -> u64 {
        self.positives + self.negatives
    }

    pub fn positive_fraction(&self) -> f64 {
        self.positives as f64 / self.nonzero().max(1) as f64
    }

    pub fn sign_change_ratio(&self) -> f64 {
        self.sign_changes as f64 / self.nonzero().max(1) as f64
    }
}

/// Classifies a real sequence; `|v| < NUMERIC_ZERO` counts as zero.
pub fn summarize_signs<I: IntoIterator<Item = f64>>(values: I) -> SignSummary {
    let mut s = SignSummary::default();
    let mut last_sign = 0i8;
    for v in values {
        s.x += 1;
        let sign = if v.abs() < NUMERIC_ZERO {
            0
        } else if v > 0.0 {
            1
        } else {
            -1
        };
        match sign {
            0 => s.zeros += 1,
            1 => s.positives += 1,
            _ => s.negatives += 1,
        }
        if sign != 0 {
            if last_sign != 0 && last_sign != sign {
                s.sign_changes += 1;
            }
            last_sign = sign;
        }
    }
    s
}

/// Sign statistics of `A(m^κ)`, `1 <= m <= x`, for palindromic κ (real coefficients).
pub fn sign_summary(form: &SyntheticForm, kappa: &KappaIndex, x: u64) -> Result<SignSummary> {
    if !kappa.is_palindromic() {
        return Err(Error::NotPalindromic(kappa.to_string()));
    }
    if x < 2 {
        return Err(Error::InvalidParameter(format!("x = {x} < 2")));
    }
    let table = form.coefficient_table(kappa, x)?;
    Ok(summarize_signs(table[1..].iter().map(|c| if c.norm() < NUMERIC_ZERO { 0.0 } else { c.re })))
}
