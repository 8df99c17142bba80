//! Sato–Tate and p-adic Plancherel measures on the Satake torus.
//!
//! `μ_ST` is the pushforward of Haar measure on `SU(n)` to eigenangles,
//! with density proportional to `∏_{l<m} |e^{iθ_l} - e^{iθ_m}|²` on the
//! subtorus `Σ θ_j ≡ 0`. The Plancherel measure is `dμ_p = w_p dμ_ST` with
//! the weight of [`plancherel_weight`].

mod metropolis;
mod montecarlo;
mod plancherel;
mod sato_tate;
mod small_values;

use rand::Rng;
use serde::{Deserialize, Serialize};

pub use metropolis::{metropolis_sato_tate, MetropolisConfig};
pub use montecarlo::{
    draw_samples, estimate_many, mc_integrate, mc_integrate_many, write_samples_csv, ChunkPlan, EstimateDump,
    MonteCarloEstimate, DEFAULT_CHUNK_SIZE,
};
pub use plancherel::{
    plancherel_bound, plancherel_normalizer, plancherel_weight, sample_plancherel, sample_plancherel_counted,
    REJECTION_CAP,
};
pub use sato_tate::{sample_sato_tate, sato_tate_density};
pub use small_values::{small_value_measure, TorusDomain};

use crate::hecke::SatakePoint;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MeasureKind {
    SatoTate,
    Plancherel { p: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureSpec {
    #[serde(flatten)]
    pub kind: MeasureKind,
    pub n: usize,
}

impl MeasureSpec {
    pub fn sato_tate(n: usize) -> Self {
        MeasureSpec { kind: MeasureKind::SatoTate, n }
    }

    pub fn plancherel(n: usize, p: u64) -> Self {
        MeasureSpec { kind: MeasureKind::Plancherel { p }, n }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidRank(self.n));
        }
        if let MeasureKind::Plancherel { p } = self.kind {
            if p < 2 {
                return Err(Error::InvalidParameter(format!("Plancherel parameter p = {p} < 2")));
            }
        }
        Ok(())
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<SatakePoint> {
        match self.kind {
            MeasureKind::SatoTate => Ok(sample_sato_tate(self.n, rng)),
            MeasureKind::Plancherel { p } => sample_plancherel(self.n, p, rng),
        }
    }
}
