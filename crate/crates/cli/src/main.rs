//! `glnstat`: seeded, reproducible runs of the glnstat-core operations.
//!
//! Artifacts go to `--output`, else into `$GLNSTAT_OUT_DIR` under a default
//! name, else to stdout. When an artifact is written to a file, stdout gets a
//! one-line summary instead.
//!
//! Exit status: 0 on success, 1 when an experiment tolerance fails (or on an
//! I/O error), 2 on an invalid configuration.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use glnstat_core::experiments::report::{
    self, NegativePrimesParams, NonvanishingParams, OrthonormalityParams, PlancherelParams, Report, SignsParams,
    SmallValuesParams, VerticalParams,
};
use glnstat_core::experiments::write_density_csv;
use glnstat_core::hecke::{hecke_product_expansion, ForcedZeros};
use glnstat_core::measures::{draw_samples, write_samples_csv, TorusDomain};
use glnstat_core::rng::DEFAULT_SEED;
use glnstat_core::{KappaIndex, MeasureSpec};

#[derive(Parser, Debug)]
#[command(name = "glnstat", version, about = "Degenerate Schur polynomials, Satake samplers and coefficient statistics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degenerate Schur polynomials.
    #[command(subcommand)]
    Schur(SchurCommand),
    /// Hecke-relation expansions.
    #[command(subcommand)]
    Hecke(HeckeCommand),
    /// Draw Satake points from a measure and dump their angles as CSV.
    Sample(SampleArgs),
    /// Run a statistical experiment and emit a JSON report.
    #[command(subcommand)]
    Experiment(ExperimentCommand),
}

#[derive(Subcommand, Debug)]
enum SchurCommand {
    /// Evaluate S_κ at a point on the torus given by its angles.
    Eval(SchurEvalArgs),
}

#[derive(Subcommand, Debug)]
enum HeckeCommand {
    /// Expand S_κ · S_κ' in the S_ξ basis.
    Expand(HeckeExpandArgs),
}

#[derive(Subcommand, Debug)]
enum ExperimentCommand {
    Nonvanishing(NonvanishingArgs),
    Signs(SignsArgs),
    SmallValues(SmallValuesArgs),
    Orthonormality(OrthonormalityArgs),
    Vertical(VerticalArgs),
    Plancherel(PlancherelArgs),
    NegativePrimes(NegativePrimesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum MeasureArg {
    SatoTate,
    Plancherel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum DomainArg {
    Full,
    Constrained,
}

/// Flags shared by every command. Only `seed` and `format` change artifacts,
/// so only they are recorded in reports.
#[derive(Args, Debug, Clone, Serialize)]
struct Common {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    #[serde(skip)]
    output: Option<PathBuf>,
    #[arg(long, env = "GLNSTAT_OUT_DIR")]
    #[serde(skip)]
    out_dir: Option<PathBuf>,
    /// Size of the rayon pool. Results do not depend on it.
    #[arg(long, default_value_t = 1)]
    #[serde(skip)]
    workers: usize,
}

#[derive(Args, Debug, Clone, Serialize)]
struct MeasureFlags {
    #[arg(long, value_enum, default_value = "sato-tate")]
    measure: MeasureArg,
    /// Prime for the Plancherel measure.
    #[arg(long)]
    p: Option<u64>,
}

#[derive(Args, Debug, Serialize)]
struct SchurEvalArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    kappa: String,
    /// Angles in radians, comma separated; the last one may be omitted.
    #[arg(long, allow_hyphen_values = true)]
    angles: String,
    #[command(flatten)]
    #[serde(flatten)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct HeckeExpandArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    kappa: String,
    /// Second factor; defaults to κ itself.
    #[arg(long)]
    kappa2: Option<String>,
    #[command(flatten)]
    #[serde(flatten)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct SampleArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    #[serde(flatten)]
    measure: MeasureFlags,
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    #[command(flatten)]
    #[serde(flatten)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct NonvanishingArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value = "1,0")]
    kappa: String,
    #[arg(long = "X", default_value_t = 100_000)]
    x: u64,
    /// Values of X at which to report the density ratio; defaults to X/10 and X.
    #[arg(long, value_delimiter = ',')]
    checkpoints: Vec<u64>,
    #[command(flatten)]
    #[serde(flatten)]
    measure: MeasureFlags,
    /// none | all | list:2,3 | mod:4:3 | above:1000
    #[arg(long, default_value = "none")]
    forced_zeros: String,
    /// Accepted band for nonzero count / sieve product, as `lo,hi`.
    #[arg(long, value_delimiter = ',', default_value = "0.5,2")]
    ratio_band: Vec<f64>,
    #[command(flatten)]
    #[serde(flatten)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct SignsArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value = "1,1")]
    kappa: String,
    #[arg(long = "X", default_value_t = 100_000)]
    x: u64,
    #[command(flatten)]
    #[serde(flatten)]
    measure: MeasureFlags,
    #[arg(long, default_value = "none")]
    forced_zeros: String,
    #[arg(long, value_delimiter = ',', default_value = "0.45,0.55")]
    positive_band: Vec<f64>,
    #[arg(long, default_value_t = 0.1)]
    min_change_ratio: f64,
    #[command(flatten)]
    #[serde(flatten)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct SmallValuesArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// One or more κ, separated by `;`.
    #[arg(long, default_value = "1,0;1,1")]
    kappa: String,
    #[arg(long, value_delimiter = ',', default_value = "0.1,0.01,0.001")]
    delta: Vec<f64>,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    #[arg(long, value_enum, default_value = "full")]
    domain: DomainArg,
    #[command(flatten)]
    #[serde(flatten)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct OrthonormalityArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Largest |κ| included in the Gram matrix.
    #[arg(long, default_value_t = 2)]
    max_size: u32,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    #[command(flatten)]
    #[serde(flatten)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct VerticalArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value = "1,0")]
    kappa: String,
    #[command(flatten)]
    #[serde(flatten)]
    measure: MeasureFlags,
    #[arg(long, default_value_t = 20)]
    bins: usize,
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    /// Fail when the total variation to the Sato–Tate histogram exceeds this.
    #[arg(long)]
    max_tv: Option<f64>,
    #[command(flatten)]
    #[serde(flatten)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct PlancherelArgs {
    #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
    n: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "2,3,5,101")]
    primes: Vec<u64>,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    #[command(flatten)]
    #[serde(flatten)]
    common: Common,
}

#[derive(Args, Debug, Serialize)]
struct NegativePrimesArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value = "1,0")]
    kappa: String,
    #[arg(long = "X", default_value_t = 1_000_000)]
    x: u64,
    #[command(flatten)]
    #[serde(flatten)]
    measure: MeasureFlags,
    #[arg(long, default_value = "none")]
    forced_zeros: String,
    #[arg(long, default_value_t = 0.2)]
    constant: f64,
    #[command(flatten)]
    #[serde(flatten)]
    common: Common,
}

/// Failures split by exit status.
#[derive(Debug)]
enum Failure {
    Config(anyhow::Error),
    Runtime(anyhow::Error),
    Assertion(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Config(anyhow::anyhow!(msg.into()))
}

fn core<T>(r: glnstat_core::Result<T>) -> CliResult<T> {
    r.map_err(|e| match e {
        glnstat_core::Error::RejectionCap(_) | glnstat_core::Error::GuardExceeded { .. } => {
            Failure::Runtime(e.into())
        }
        _ => Failure::Config(e.into()),
    })
}

fn parse_kappa(n: usize, s: &str) -> CliResult<KappaIndex> {
    core(KappaIndex::parse(n, s))
}

fn check_rank(n: usize) -> CliResult<()> {
    if n < 2 {
        return Err(invalid("--n must be at least 2"));
    }
    Ok(())
}

fn check_positive(name: &str, v: u64) -> CliResult<()> {
    if v == 0 {
        return Err(invalid(format!("{name} must be positive")));
    }
    Ok(())
}

fn check_x(x: u64) -> CliResult<()> {
    if x < 2 {
        return Err(invalid("--X must be at least 2"));
    }
    Ok(())
}

fn band(name: &str, v: &[f64]) -> CliResult<(f64, f64)> {
    match v {
        [lo, hi] if lo.is_finite() && hi.is_finite() && lo <= hi => Ok((*lo, *hi)),
        _ => Err(invalid(format!("{name} expects `lo,hi` with lo <= hi"))),
    }
}

fn measure_spec(n: usize, flags: &MeasureFlags) -> CliResult<MeasureSpec> {
    let spec = match (flags.measure, flags.p) {
        (MeasureArg::SatoTate, None) => MeasureSpec::sato_tate(n),
        (MeasureArg::SatoTate, Some(_)) => return Err(invalid("--p only applies to --measure plancherel")),
        (MeasureArg::Plancherel, Some(p)) => MeasureSpec::plancherel(n, p),
        (MeasureArg::Plancherel, None) => return Err(invalid("--measure plancherel requires --p")),
    };
    core(spec.validate())?;
    Ok(spec)
}

fn forced_zeros(s: &str) -> CliResult<ForcedZeros> {
    core(s.parse::<ForcedZeros>())
}

/// Where an artifact goes.
enum Sink {
    Stdout,
    File(PathBuf),
}

impl Sink {
    fn resolve(common: &Common, default_name: &str) -> Self {
        match (&common.output, &common.out_dir) {
            (Some(path), _) => Sink::File(path.clone()),
            (None, Some(dir)) => Sink::File(dir.join(default_name)),
            (None, None) => Sink::Stdout,
        }
    }

    /// Writes the artifact, then the summary line to stdout (or stderr when the
    /// artifact itself went to stdout).
    fn emit(&self, bytes: &[u8], summary: &str) -> CliResult<()> {
        match self {
            Sink::Stdout => {
                let mut out = io::stdout().lock();
                out.write_all(bytes)?;
                out.flush()?;
                eprintln!("{summary}");
            }
            Sink::File(path) => {
                if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                    fs::create_dir_all(parent)?;
                }
                fs::write(path, bytes)
                    .with_context(|| format!("writing {}", path.display()))
                    .map_err(Failure::Runtime)?;
                println!("{summary} -> {}", path.display());
            }
        }
        Ok(())
    }
}

fn format_of(common: &Common, default: Format, allowed: &[Format]) -> CliResult<Format> {
    let f = common.format.unwrap_or(default);
    if !allowed.contains(&f) {
        return Err(invalid(format!("format {f:?} is not available for this command")));
    }
    Ok(f)
}

fn extension(f: Format) -> &'static str {
    match f {
        Format::Csv => "csv",
        Format::Json => "json",
    }
}

#[derive(Serialize)]
struct ReportDocument<'a, C: Serialize> {
    config: &'a C,
    #[serde(flatten)]
    report: &'a Report,
}

fn report_json<C: Serialize>(config: &C, report: &Report) -> Vec<u8> {
    let mut bytes = serde_json::to_vec_pretty(&ReportDocument { config, report }).expect("report serializes");
    bytes.push(b'\n');
    bytes
}

fn summarize(report: &Report) -> String {
    let failed = report.failures().count();
    format!(
        "{}: {} ({}/{} checks passed)",
        report.experiment,
        if report.pass { "pass" } else { "FAIL" },
        report.tolerances.len() - failed,
        report.tolerances.len()
    )
}

/// Emits a report as JSON and turns failed tolerances into exit status 1.
fn finish_report<C: Serialize>(config: &C, common: &Common, report: &Report, name: &str) -> CliResult<()> {
    let sink = Sink::resolve(common, &format!("{name}.json"));
    sink.emit(&report_json(config, report), &summarize(report))?;
    check(report)
}

fn check(report: &Report) -> CliResult<()> {
    if report.pass {
        return Ok(());
    }
    let names: Vec<String> = report
        .failures()
        .map(|t| format!("{} = {}", t.name, t.observed))
        .collect();
    Err(Failure::Assertion(names.join("; ")))
}

fn schur_eval(args: &SchurEvalArgs) -> CliResult<()> {
    check_rank(args.n)?;
    let format = format_of(&args.common, Format::Csv, &[Format::Csv, Format::Json])?;
    let kappa = parse_kappa(args.n, &args.kappa)?;
    let angles = args
        .angles
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<f64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| invalid(format!("invalid angle: {e}")))?;
    if angles.iter().any(|a| !a.is_finite()) {
        return Err(invalid("angles must be finite"));
    }
    let value = core(report::eval_at_angles(&kappa, &angles))?;
    let text = match format {
        // Palindromic κ are real on the torus; drop the rounding noise in Im.
        Format::Csv if kappa.is_palindromic() || value.im == 0.0 => format!("{}\n", value.re),
        Format::Csv => format!("{}{:+}i\n", value.re, value.im),
        Format::Json => format!("{}\n", serde_json::json!({ "config": args, "re": value.re, "im": value.im })),
    };
    let summary = format!("S_{kappa} = {}", text.trim_end());
    Sink::resolve(&args.common, &format!("schur-eval.{}", extension(format))).emit(text.as_bytes(), &summary)
}

fn hecke_expand(args: &HeckeExpandArgs) -> CliResult<()> {
    check_rank(args.n)?;
    let format = format_of(&args.common, Format::Csv, &[Format::Csv, Format::Json])?;
    let kappa = parse_kappa(args.n, &args.kappa)?;
    let other = match &args.kappa2 {
        Some(s) => parse_kappa(args.n, s)?,
        None => kappa.clone(),
    };
    let expansion = core(hecke_product_expansion(&kappa, &other))?;
    let bytes = match format {
        Format::Csv => {
            let mut buf = Vec::new();
            expansion.write_csv(&mut buf)?;
            buf
        }
        Format::Json => {
            let terms: Vec<_> = expansion
                .by_kappa()
                .into_iter()
                .map(|(xi, c)| serde_json::json!({ "xi": xi.dashed(), "coefficient": c.to_string() }))
                .collect();
            let mut buf = serde_json::to_vec_pretty(&serde_json::json!({ "config": args, "terms": terms }))
                .expect("expansion serializes");
            buf.push(b'\n');
            buf
        }
    };
    let summary = format!("S_{kappa} * S_{other}: {} terms", expansion.len());
    let name = format!("hecke-expand-{}-{}.{}", kappa.dashed(), other.dashed(), extension(format));
    Sink::resolve(&args.common, &name).emit(&bytes, &summary)
}

fn sample(args: &SampleArgs) -> CliResult<()> {
    check_rank(args.n)?;
    check_positive("--samples", args.samples)?;
    format_of(&args.common, Format::Csv, &[Format::Csv])?;
    let spec = measure_spec(args.n, &args.measure)?;
    let points = core(draw_samples(&spec, args.samples, args.common.seed))?;
    let mut buf = Vec::new();
    write_samples_csv(&mut buf, args.common.seed, &points)?;
    let summary = format!("{} samples of SU({}) angles", points.len(), args.n);
    Sink::resolve(&args.common, &format!("samples-n{}-seed{}.csv", args.n, args.common.seed)).emit(&buf, &summary)
}

fn nonvanishing(args: &NonvanishingArgs) -> CliResult<()> {
    check_rank(args.n)?;
    check_x(args.x)?;
    let format = format_of(&args.common, Format::Json, &[Format::Csv, Format::Json])?;
    parse_kappa(args.n, &args.kappa)?;
    let checkpoints = if args.checkpoints.is_empty() {
        let mut c = vec![(args.x / 10).max(2), args.x];
        c.dedup();
        c
    } else {
        args.checkpoints.clone()
    };
    if checkpoints.iter().any(|&c| c < 2 || c > args.x) {
        return Err(invalid("checkpoints must lie in [2, X]"));
    }
    let params = NonvanishingParams {
        n: args.n,
        kappa: parse_kappa(args.n, &args.kappa)?.entries().to_vec(),
        x: args.x,
        checkpoints,
        measure: measure_spec(args.n, &args.measure)?,
        forced_zeros: forced_zeros(&args.forced_zeros)?,
        ratio_band: Some(band("--ratio-band", &args.ratio_band)?),
    };
    let report = core(report::nonvanishing(&params, args.common.seed))?;
    match format {
        Format::Json => finish_report(args, &args.common, &report, "nonvanishing"),
        Format::Csv => {
            let rows: Vec<glnstat_core::experiments::DensityRow> =
                serde_json::from_value(report.results["curve"].clone()).expect("curve rows round-trip");
            let mut buf = Vec::new();
            write_density_csv(&mut buf, &rows)?;
            Sink::resolve(&args.common, "nonvanishing.csv").emit(&buf, &summarize(&report))?;
            check(&report)
        }
    }
}

fn signs(args: &SignsArgs) -> CliResult<()> {
    check_rank(args.n)?;
    check_x(args.x)?;
    format_of(&args.common, Format::Json, &[Format::Json])?;
    let params = SignsParams {
        n: args.n,
        kappa: parse_kappa(args.n, &args.kappa)?.entries().to_vec(),
        x: args.x,
        measure: measure_spec(args.n, &args.measure)?,
        forced_zeros: forced_zeros(&args.forced_zeros)?,
        positive_fraction_band: band("--positive-band", &args.positive_band)?,
        min_sign_change_ratio: args.min_change_ratio,
    };
    let report = core(report::signs(&params, args.common.seed))?;
    finish_report(args, &args.common, &report, "signs")
}

fn small_values(args: &SmallValuesArgs) -> CliResult<()> {
    check_rank(args.n)?;
    check_positive("--samples", args.samples)?;
    format_of(&args.common, Format::Json, &[Format::Json])?;
    if args.delta.is_empty() || args.delta.iter().any(|&d| !(d > 0.0 && d.is_finite())) {
        return Err(invalid("--delta values must be positive"));
    }
    let kappas = args
        .kappa
        .split(';')
        .map(|s| parse_kappa(args.n, s).map(|k| k.entries().to_vec()))
        .collect::<CliResult<Vec<_>>>()?;
    let params = SmallValuesParams {
        kappas,
        deltas: args.delta.clone(),
        samples: args.samples,
        domain: match args.domain {
            DomainArg::Full => TorusDomain::Full,
            DomainArg::Constrained => TorusDomain::Constrained,
        },
        ..SmallValuesParams::default()
    };
    let report = core(report::small_values(&params, args.common.seed))?;
    finish_report(args, &args.common, &report, "small-values")
}

fn orthonormality(args: &OrthonormalityArgs) -> CliResult<()> {
    check_rank(args.n)?;
    check_positive("--samples", args.samples)?;
    format_of(&args.common, Format::Json, &[Format::Json])?;
    let kappas = core(KappaIndex::all_up_to(args.n, args.max_size))?
        .into_iter()
        .map(|k| k.entries().to_vec())
        .collect();
    let params = OrthonormalityParams { n: args.n, kappas, samples: args.samples, ..OrthonormalityParams::default() };
    let report = core(report::orthonormality(&params, args.common.seed))?;
    finish_report(args, &args.common, &report, "orthonormality")
}

fn vertical(args: &VerticalArgs) -> CliResult<()> {
    check_rank(args.n)?;
    check_positive("--samples", args.samples)?;
    format_of(&args.common, Format::Json, &[Format::Json])?;
    if args.bins < 2 {
        return Err(invalid("--bins must be at least 2"));
    }
    let params = VerticalParams {
        kappa: parse_kappa(args.n, &args.kappa)?.entries().to_vec(),
        measure: measure_spec(args.n, &args.measure)?,
        bins: args.bins,
        samples: args.samples,
        max_total_variation: args.max_tv,
    };
    let report = core(report::vertical(&params, args.common.seed))?;
    finish_report(args, &args.common, &report, "vertical")
}

fn plancherel(args: &PlancherelArgs) -> CliResult<()> {
    check_positive("--samples", args.samples)?;
    format_of(&args.common, Format::Json, &[Format::Json])?;
    if args.n.iter().any(|&n| n < 2) || args.primes.iter().any(|&p| p < 2) {
        return Err(invalid("ranks must be at least 2 and primes at least 2"));
    }
    let params = PlancherelParams {
        ranks: args.n.clone(),
        primes: args.primes.clone(),
        samples: args.samples,
        ..PlancherelParams::default()
    };
    let report = core(report::plancherel_normalization(&params, args.common.seed))?;
    finish_report(args, &args.common, &report, "plancherel")
}

fn negative_primes(args: &NegativePrimesArgs) -> CliResult<()> {
    check_rank(args.n)?;
    check_x(args.x)?;
    format_of(&args.common, Format::Json, &[Format::Json])?;
    let params = NegativePrimesParams {
        n: args.n,
        kappa: parse_kappa(args.n, &args.kappa)?.entries().to_vec(),
        x: args.x,
        measure: measure_spec(args.n, &args.measure)?,
        forced_zeros: forced_zeros(&args.forced_zeros)?,
        constant: args.constant,
    };
    let report = core(report::negative_primes(&params, args.common.seed))?;
    finish_report(args, &args.common, &report, "negative-primes")
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Schur(SchurCommand::Eval(a)) => &a.common,
        Command::Hecke(HeckeCommand::Expand(a)) => &a.common,
        Command::Sample(a) => &a.common,
        Command::Experiment(e) => match e {
            ExperimentCommand::Nonvanishing(a) => &a.common,
            ExperimentCommand::Signs(a) => &a.common,
            ExperimentCommand::SmallValues(a) => &a.common,
            ExperimentCommand::Orthonormality(a) => &a.common,
            ExperimentCommand::Vertical(a) => &a.common,
            ExperimentCommand::Plancherel(a) => &a.common,
            ExperimentCommand::NegativePrimes(a) => &a.common,
        },
    }
}

fn dispatch(cmd: &Command) -> CliResult<()> {
    match cmd {
        Command::Schur(SchurCommand::Eval(a)) => schur_eval(a),
        Command::Hecke(HeckeCommand::Expand(a)) => hecke_expand(a),
        Command::Sample(a) => sample(a),
        Command::Experiment(e) => match e {
            ExperimentCommand::Nonvanishing(a) => nonvanishing(a),
            ExperimentCommand::Signs(a) => signs(a),
            ExperimentCommand::SmallValues(a) => small_values(a),
            ExperimentCommand::Orthonormality(a) => orthonormality(a),
            ExperimentCommand::Vertical(a) => vertical(a),
            ExperimentCommand::Plancherel(a) => plancherel(a),
            ExperimentCommand::NegativePrimes(a) => negative_primes(a),
        },
    }
}

fn run(cli: &Cli) -> CliResult<()> {
    let workers = common(&cli.command).workers;
    if workers == 0 {
        return Err(invalid("--workers must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Failure::Runtime(e.into()))?;
    pool.install(|| dispatch(&cli.command))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion(msg)) => {
            eprintln!("assertion failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Config(e)) => {
            eprintln!("invalid configuration: {e:#}");
            ExitCode::from(2)
        }
    }
}
