//! Self-describing experiment reports.
//!
//! Every runner returns a [`Report`] holding its parameters, seed, results
//! and the tolerances it was judged against. Reports are plain data: the
//! same parameters and seed give the same JSON whatever the rayon pool size.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{
    negative_prime_reciprocal_sum, nonvanishing_density_curve, sieve_report, sign_summary,
    vertical_distribution_histogram, zero_prime_reciprocal_sum,
};
use crate::hecke::{build_form, schur_value, ForcedZeros};
use crate::measures::{mc_integrate_many, plancherel_bound, plancherel_weight, small_value_measure, MeasureSpec, TorusDomain};
use crate::stats::total_variation;
use crate::symfunc::{KappaIndex, SchurPolynomial};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub name: String,
    pub observed: f64,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    pub pass: bool,
}

impl Tolerance {
    pub fn within(name: impl Into<String>, observed: f64, lower: Option<f64>, upper: Option<f64>) -> Self {
        let pass = observed.is_finite()
            && lower.is_none_or(|lo| observed >= lo)
            && upper.is_none_or(|hi| observed <= hi);
        Tolerance { name: name.into(), observed, lower, upper, pass }
    }

    pub fn at_most(name: impl Into<String>, observed: f64, upper: f64) -> Self {
        Tolerance::within(name, observed, None, Some(upper))
    }

    pub fn at_least(name: impl Into<String>, observed: f64, lower: f64) -> Self {
        Tolerance::within(name, observed, Some(lower), None)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub experiment: String,
    pub parameters: Value,
    pub seed: u64,
    pub results: Value,
    pub tolerances: Vec<Tolerance>,
    pub pass: bool,
}

impl Report {
    fn new<P: Serialize>(experiment: &str, parameters: &P, seed: u64, results: Value, tolerances: Vec<Tolerance>) -> Self {
        let pass = tolerances.iter().all(|t| t.pass);
        Report {
            experiment: experiment.to_string(),
            parameters: serde_json::to_value(parameters).expect("parameters serialize"),
            seed,
            results,
            tolerances,
            pass,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Tolerance> {
        self.tolerances.iter().filter(|t| !t.pass)
    }
}

/// Gram matrix `∫ S_κ conj(S_λ) dμ_ST` against the identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrthonormalityParams {
    pub n: usize,
    pub kappas: Vec<Vec<u32>>,
    pub samples: u64,
    pub sigmas: f64,
    pub abs_floor: f64,
}

impl Default for OrthonormalityParams {
    fn default() -> Self {
        OrthonormalityParams {
            n: 3,
            kappas: vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 0], vec![0, 2]],
            samples: 1_000_000,
            sigmas: 3.0,
            abs_floor: 5e-3,
        }
    }
}

pub fn orthonormality(params: &OrthonormalityParams, seed: u64) -> Result<Report> {
    let kappas = params
        .kappas
        .iter()
        .map(|k| KappaIndex::new(params.n, k.clone()))
        .collect::<Result<Vec<_>>>()?;
    let polys = kappas
        .iter()
        .map(|k| SchurPolynomial::cached(&k.partition(), params.n))
        .collect::<Result<Vec<_>>>()?;
    let m = kappas.len();
    let estimates = mc_integrate_many(&MeasureSpec::sato_tate(params.n), params.samples, seed, m * m, |point, out| {
        let xs = point.values();
        let vals: Vec<Complex64> = polys.iter().map(|p| p.eval_unchecked(&xs)).collect();
        for i in 0..m {
            for j in 0..m {
                out[i * m + j] = vals[i] * vals[j].conj();
            }
        }
    })?;
    let mut tolerances = Vec::new();
    let mut gram = vec![vec![[0.0; 2]; m]; m];
    let mut stderr = vec![vec![0.0; m]; m];
    for i in 0..m {
        for j in 0..m {
            let e = &estimates[i * m + j];
            let target = if i == j { 1.0 } else { 0.0 };
            gram[i][j] = [e.value.re, e.value.im];
            stderr[i][j] = e.stderr;
            tolerances.push(Tolerance::at_most(
                format!("|G{}{} - delta|", kappas[i], kappas[j]),
                (e.value - Complex64::new(target, 0.0)).norm(),
                (params.sigmas * e.stderr).max(params.abs_floor),
            ));
        }
    }
    let results = json!({ "gram": gram, "stderr": stderr });
    Ok(Report::new("orthonormality", params, seed, results, tolerances))
}

/// `E_ST[w_p] = 1` for every rank and prime listed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlancherelParams {
    pub ranks: Vec<usize>,
    pub primes: Vec<u64>,
    pub samples: u64,
    pub sigmas: f64,
}

impl Default for PlancherelParams {
    fn default() -> Self {
        PlancherelParams { ranks: vec![2, 3, 4], primes: vec![2, 3, 5, 101], samples: 1_000_000, sigmas: 3.0 }
    }
}

pub fn plancherel_normalization(params: &PlancherelParams, seed: u64) -> Result<Report> {
    let mut rows = Vec::new();
    let mut tolerances = Vec::new();
    for &n in &params.ranks {
        let est = mc_integrate_many(&MeasureSpec::sato_tate(n), params.samples, seed, params.primes.len(), |point, out| {
            for (o, &p) in out.iter_mut().zip(&params.primes) {
                *o = Complex64::new(plancherel_weight(point, p), 0.0);
            }
        })?;
        for (e, &p) in est.iter().zip(&params.primes) {
            rows.push(json!({
                "n": n, "p": p, "mean": e.value.re, "stderr": e.stderr, "bound": plancherel_bound(n, p),
            }));
            tolerances.push(Tolerance::at_most(
                format!("|E_ST[w_{p}] - 1| (n={n})"),
                (e.value.re - 1.0).abs(),
                params.sigmas * e.stderr,
            ));
        }
    }
    Ok(Report::new("plancherel-normalization", params, seed, json!({ "weights": rows }), tolerances))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignsParams {
    pub n: usize,
    pub kappa: Vec<u32>,
    pub x: u64,
    pub measure: MeasureSpec,
    pub forced_zeros: ForcedZeros,
    pub positive_fraction_band: (f64, f64),
    pub min_sign_change_ratio: f64,
}

impl Default for SignsParams {
    fn default() -> Self {
        SignsParams {
            n: 3,
            kappa: vec![1, 1],
            x: 100_000,
            measure: MeasureSpec::sato_tate(3),
            forced_zeros: ForcedZeros::None,
            positive_fraction_band: (0.45, 0.55),
            min_sign_change_ratio: 0.1,
        }
    }
}

pub fn signs(params: &SignsParams, seed: u64) -> Result<Report> {
    let kappa = KappaIndex::new(params.n, params.kappa.clone())?;
    let form = build_form(params.measure, seed, params.x, params.forced_zeros.clone())?;
    let summary = sign_summary(&form, &kappa, params.x)?;
    let (lo, hi) = params.positive_fraction_band;
    let tolerances = vec![
        Tolerance::within("positive fraction among nonzero", summary.positive_fraction(), Some(lo), Some(hi)),
        Tolerance::at_least("sign changes / nonzero", summary.sign_change_ratio(), params.min_sign_change_ratio),
    ];
    let results = json!({
        "summary": summary,
        "positive_fraction": summary.positive_fraction(),
        "sign_change_ratio": summary.sign_change_ratio(),
    });
    Ok(Report::new("signs", params, seed, results, tolerances))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NonvanishingParams {
    pub n: usize,
    pub kappa: Vec<u32>,
    pub x: u64,
    pub checkpoints: Vec<u64>,
    pub measure: MeasureSpec,
    pub forced_zeros: ForcedZeros,
    /// Band for `nonzero_count / sieve_product` at each checkpoint; `None` skips it.
    pub ratio_band: Option<(f64, f64)>,
}

impl Default for NonvanishingParams {
    fn default() -> Self {
        NonvanishingParams {
            n: 3,
            kappa: vec![1, 0],
            x: 100_000,
            checkpoints: vec![10_000, 100_000],
            measure: MeasureSpec::sato_tate(3),
            forced_zeros: ForcedZeros::residue(4, &[3]),
            ratio_band: Some((0.5, 2.0)),
        }
    }
}

pub fn nonvanishing(params: &NonvanishingParams, seed: u64) -> Result<Report> {
    let kappa = KappaIndex::new(params.n, params.kappa.clone())?;
    let form = build_form(params.measure, seed, params.x, params.forced_zeros.clone())?;
    let report = sieve_report(&form, &kappa, params.x)?;
    let curve = nonvanishing_density_curve(&form, &kappa, params.x, &params.checkpoints)?;
    let h = &report.hypotheses;
    let mut tolerances = vec![
        Tolerance::at_most("nonzero indices outside S1 ∪ S2", report.cover_violations as f64, 0.0),
        Tolerance::at_most("(Ω1) max ω(p)/p", h.omega1_max, 1.0 - 1.0 / h.a),
        Tolerance::at_most("(Ω2) max excess over A log(z/w)", h.omega2_max_excess, h.a),
        Tolerance::at_most("(R) max |R_d|", h.remainder_max, 1.0),
    ];
    if let Some((lo, hi)) = params.ratio_band {
        for row in &curve {
            tolerances.push(Tolerance::within(
                format!("nonzero / sieve product at X={}", row.x),
                row.ratio,
                Some(lo),
                Some(hi),
            ));
        }
    }
    let results = json!({ "sieve": report, "curve": curve });
    Ok(Report::new("nonvanishing", params, seed, results, tolerances))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SmallValuesParams {
    pub kappas: Vec<Vec<u32>>,
    pub deltas: Vec<f64>,
    pub samples: u64,
    pub domain: TorusDomain,
    pub sigmas: f64,
}

impl Default for SmallValuesParams {
    fn default() -> Self {
        SmallValuesParams {
            kappas: vec![vec![1], vec![1, 0], vec![1, 1]],
            deltas: vec![0.1, 0.01, 0.001],
            samples: 1_000_000,
            domain: TorusDomain::Full,
            sigmas: 3.0,
        }
    }
}

/// Measured fraction of the torus with `|S_κ| < δ` against `δ^{1/2^n}`.
pub fn small_values(params: &SmallValuesParams, seed: u64) -> Result<Report> {
    let mut rows = Vec::new();
    let mut tolerances = Vec::new();
    for k in &params.kappas {
        let kappa = KappaIndex::from_slice(k)?;
        let n = kappa.n();
        for &delta in &params.deltas {
            let est = small_value_measure(&kappa, delta, params.samples, seed, params.domain)?;
            let bound = delta.powf(1.0 / 2f64.powi(n as i32));
            let fraction = est.value.re;
            let exponent = if fraction > 0.0 { fraction.ln() / delta.ln() } else { f64::INFINITY };
            rows.push(json!({
                "kappa": k, "n": n, "delta": delta, "fraction": fraction, "stderr": est.stderr,
                "bound": bound, "empirical_exponent": if exponent.is_finite() { json!(exponent) } else { Value::Null },
            }));
            tolerances.push(Tolerance::at_most(
                format!("measure{{|S_{kappa}| < {delta}}}"),
                fraction,
                bound + params.sigmas * est.stderr,
            ));
        }
    }
    Ok(Report::new("small-values", params, seed, json!({ "rows": rows }), tolerances))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerticalParams {
    pub kappa: Vec<u32>,
    pub measure: MeasureSpec,
    pub bins: usize,
    pub samples: u64,
    /// Upper bound on the total-variation distance to the Sato–Tate histogram.
    pub max_total_variation: Option<f64>,
}

impl Default for VerticalParams {
    fn default() -> Self {
        VerticalParams {
            kappa: vec![1, 0],
            measure: MeasureSpec::plancherel(3, 1_000_000),
            bins: 20,
            samples: 100_000,
            max_total_variation: Some(0.02),
        }
    }
}

/// Seed offset for the Sato–Tate reference histogram.
const REFERENCE_SEED_SALT: u64 = 0x5A70_7A7E;

pub fn vertical(params: &VerticalParams, seed: u64) -> Result<Report> {
    let kappa = KappaIndex::new(params.measure.n, params.kappa.clone())?;
    let hist = vertical_distribution_histogram(&params.measure, &kappa, params.bins, params.samples, seed)?;
    let reference = vertical_distribution_histogram(
        &MeasureSpec::sato_tate(params.measure.n),
        &kappa,
        params.bins,
        params.samples,
        seed ^ REFERENCE_SEED_SALT,
    )?;
    let tv = total_variation(&hist.mass, &reference.mass);
    let tolerances = params
        .max_total_variation
        .map(|limit| vec![Tolerance::at_most("total variation to Sato-Tate", tv, limit)])
        .unwrap_or_default();
    let results = json!({ "histogram": hist, "sato_tate_reference": reference, "total_variation": tv });
    Ok(Report::new("vertical", params, seed, results, tolerances))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NegativePrimesParams {
    pub n: usize,
    pub kappa: Vec<u32>,
    pub x: u64,
    pub measure: MeasureSpec,
    pub forced_zeros: ForcedZeros,
    /// Required `Σ_{Re A(p^κ) < 0} 1/p >= constant · log log X`.
    pub constant: f64,
}

impl Default for NegativePrimesParams {
    fn default() -> Self {
        NegativePrimesParams {
            n: 3,
            kappa: vec![1, 0],
            x: 1_000_000,
            measure: MeasureSpec::sato_tate(3),
            forced_zeros: ForcedZeros::None,
            constant: 0.2,
        }
    }
}

pub fn negative_primes(params: &NegativePrimesParams, seed: u64) -> Result<Report> {
    let kappa = KappaIndex::new(params.n, params.kappa.clone())?;
    let form = build_form(params.measure, seed, params.x, params.forced_zeros.clone())?;
    let negative = negative_prime_reciprocal_sum(&form, &kappa, params.x)?;
    let zero = zero_prime_reciprocal_sum(&form, &kappa, params.x)?;
    let loglog = (params.x as f64).ln().ln();
    let tolerances = vec![Tolerance::at_least("Σ_{Re A(p^κ)<0} 1/p", negative, params.constant * loglog)];
    let results = json!({
        "negative_reciprocal_sum": negative,
        "zero_reciprocal_sum": zero,
        "log_log_x": loglog,
        "ratio_to_log_log_x": negative / loglog,
    });
    Ok(Report::new("negative-primes", params, seed, results, tolerances))
}

/// `S_κ` at explicit angles (last angle optional); used by `schur eval`.
pub fn eval_at_angles(kappa: &KappaIndex, angles: &[f64]) -> Result<Complex64> {
    let point = crate::hecke::SatakePoint::from_angles(kappa.n(), angles)?;
    schur_value(kappa, &point.values())
}
