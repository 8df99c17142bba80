use std::io::{self, Write};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::MeasureSpec;
use crate::hecke::SatakePoint;
use crate::rng::{stream, Domain, Stream};
use crate::stats::Moments;
use crate::{Error, Result};

pub const DEFAULT_CHUNK_SIZE: u64 = 1 << 13;

/// How a sample budget is cut into independently seeded chunks. Chunk `i`
/// draws from `rng::stream(seed, i, Domain::MonteCarloChunk)`; partial
/// moments are merged in chunk order, so the estimate does not depend on the
/// number of worker threads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChunkPlan {
    pub chunk_size: u64,
}

impl Default for ChunkPlan {
    fn default() -> Self {
        ChunkPlan { chunk_size: DEFAULT_CHUNK_SIZE }
    }
}

impl ChunkPlan {
    fn chunks(&self, samples: u64) -> impl IndexedParallelIterator<Item = (u64, u64)> {
        let size = self.chunk_size.max(1);
        let count = samples.div_ceil(size) as usize;
        (0..count).into_par_iter().map(move |i| {
            let i = i as u64;
            (i, size.min(samples - i * size))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloEstimate {
    pub value: Complex64,
    /// Sample standard deviation of `|f - mean|` over `sqrt(samples)`.
    pub stderr: f64,
    pub samples: u64,
}

impl MonteCarloEstimate {
    fn from_moments(m: &Moments) -> Self {
        MonteCarloEstimate { value: m.mean, stderr: m.stderr(), samples: m.count }
    }

    /// Whether `|value - target| <= max(k·stderr, floor)`.
    pub fn agrees_with(&self, target: Complex64, k: f64, floor: f64) -> bool {
        (self.value - target).norm() <= (k * self.stderr).max(floor)
    }
}

/// JSON record of an estimate together with the measure it was taken under.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EstimateDump {
    pub value: Complex64,
    pub stderr: f64,
    pub samples: u64,
    pub spec: MeasureSpec,
}

impl EstimateDump {
    pub fn new(estimate: &MonteCarloEstimate, spec: MeasureSpec) -> Self {
        EstimateDump { value: estimate.value, stderr: estimate.stderr, samples: estimate.samples, spec }
    }
}

/// Generic chunked estimator: `draw` produces one sample from a chunk's
/// stream and `f` writes `dim` complex observables for it.
pub fn estimate_many<S, D, F>(
    samples: u64,
    seed: u64,
    plan: ChunkPlan,
    dim: usize,
    draw: D,
    f: F,
) -> Result<Vec<MonteCarloEstimate>>
where
    D: Fn(&mut Stream) -> Result<S> + Sync,
    F: Fn(&S, &mut [Complex64]) + Sync,
{
    if samples < 2 {
        return Err(Error::InvalidParameter(format!("need at least 2 samples, got {samples}")));
    }
    let partials = plan
        .chunks(samples)
        .map(|(index, len)| {
            let mut rng = stream(seed, index, Domain::MonteCarloChunk);
            let mut moments = vec![Moments::default(); dim];
            let mut buf = vec![Complex64::new(0.0, 0.0); dim];
            for _ in 0..len {
                let s = draw(&mut rng)?;
                f(&s, &mut buf);
                for (m, &x) in moments.iter_mut().zip(&buf) {
                    m.push(x);
                }
            }
            Ok(moments)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total = vec![Moments::default(); dim];
    for part in &partials {
        for (t, p) in total.iter_mut().zip(part) {
            t.merge(p);
        }
    }
    Ok(total.iter().map(MonteCarloEstimate::from_moments).collect())
}

/// `∫ f dμ` for `μ` given by `spec`.
pub fn mc_integrate<F>(f: F, spec: &MeasureSpec, samples: u64, seed: u64) -> Result<MonteCarloEstimate>
where
    F: Fn(&SatakePoint) -> Complex64 + Sync,
{
    spec.validate()?;
    let est = estimate_many(samples, seed, ChunkPlan::default(), 1, |rng| spec.sample(rng), |p, out| out[0] = f(p))?;
    Ok(est[0])
}

/// Several integrals over the same draws; `f` fills `dim` values per point.
pub fn mc_integrate_many<F>(spec: &MeasureSpec, samples: u64, seed: u64, dim: usize, f: F) -> Result<Vec<MonteCarloEstimate>>
where
    F: Fn(&SatakePoint, &mut [Complex64]) + Sync,
{
    spec.validate()?;
    estimate_many(samples, seed, ChunkPlan::default(), dim, |rng| spec.sample(rng), f)
}

/// Draws `count` points under the default chunk plan; the same `(spec, seed)`
/// reproduces the same sequence whatever the thread count.
pub fn draw_samples(spec: &MeasureSpec, count: u64, seed: u64) -> Result<Vec<SatakePoint>> {
    spec.validate()?;
    let chunks = ChunkPlan::default()
        .chunks(count)
        .map(|(index, len)| {
            let mut rng = stream(seed, index, Domain::MonteCarloChunk);
            (0..len).map(|_| spec.sample(&mut rng)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

/// CSV dump with columns `seed,index,theta_1,…,theta_n`.
pub fn write_samples_csv<W: Write>(mut out: W, seed: u64, points: &[SatakePoint]) -> io::Result<()> {
    let n = points.first().map_or(0, SatakePoint::n);
    let header: Vec<String> = (1..=n).map(|j| format!("theta_{j}")).collect();
    writeln!(out, "seed,index,{}", header.join(","))?;
    for (i, p) in points.iter().enumerate() {
        let angles: Vec<String> = p.angles().iter().map(f64::to_string).collect();
        writeln!(out, "{seed},{i},{}", angles.join(","))?;
    }
    Ok(())
}
