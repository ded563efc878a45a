//! Command-line front end: sweep commands that write CSV (plus a replayable
//! manifest) and a verification command that runs the oracle, property and
//! bound suites.

mod config;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use corrwitness::dephasing::{family_spec, DephasingParams, StateFamily};
use corrwitness::experiments::{
    concurrence_map, default_dephasing_t_max, default_increase_tolerance,
    default_spinstar_t_max, delta_traces, frequency_curve, sample_rng, DephasingSweep,
    ExperimentConfig, SpinStarSweep, SweepModel, DEFAULT_LAMBDA_POINTS, DEFAULT_SAMPLES,
    DEFAULT_TIME_POINTS,
};
use corrwitness::spinstar::SpinStarParams;
use corrwitness::verify;

use config::{format_float, write_manifest, Resolver};

/// Error with an exit-status class: usage errors exit 2, runtime errors 1.
#[derive(Debug)]
pub struct CliError {
    usage: bool,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            usage: true,
            message: message.into(),
        }
    }

    fn runtime(message: impl Into<String>) -> Self {
        Self {
            usage: false,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<corrwitness::Error> for CliError {
    fn from(e: corrwitness::Error) -> Self {
        CliError::runtime(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "corrwitness",
    version,
    about = "Distance-measure witnesses of initial system-environment correlations",
    after_help = "Config precedence: CLI flags > --config file > defaults. Every run that \
                  writes a CSV also writes <out>.manifest with the fully resolved settings; \
                  replaying a manifest via --config reproduces the output byte for byte. \
                  CORRWITNESS_THREADS caps worker threads (default: all cores)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance change over time between a correlated state and its
    /// uncorrelated partner, for all four measures
    Timetrace(TimetraceArgs),
    /// Frequency of a distance increase over random initial preparations,
    /// per lambda (dephasing model)
    Frequency(FrequencyArgs),
    /// Concurrence of the evolved total dephasing state over (lambda, t),
    /// with the lambda threshold of dynamical entanglement gain
    Concurrence(ConcurrenceArgs),
    /// Frequency of a distance increase for the spin-star model with
    /// Haar-random preparations
    Spinstar(SpinstarArgs),
    /// Run verification suites (oracle cross-checks, measure properties,
    /// witness bounds)
    Verify(VerifyArgs),
}

#[derive(Args)]
struct DephasingPhysicsArgs {
    /// Two-level energy splitting
    #[arg(long)]
    epsilon: Option<f64>,
    /// Bosonic mode frequency
    #[arg(long)]
    omega: Option<f64>,
    /// System-mode coupling strength
    #[arg(long)]
    g0: Option<f64>,
    /// Coherent-state label, real part
    #[arg(long)]
    z_re: Option<f64>,
    /// Coherent-state label, imaginary part
    #[arg(long)]
    z_im: Option<f64>,
}

fn resolve_dephasing_params(
    resolver: &mut Resolver,
    args: &DephasingPhysicsArgs,
) -> Result<DephasingParams<f64>, CliError> {
    let epsilon = resolver.float("epsilon", args.epsilon, 1.0)?;
    let omega = resolver.float("omega", args.omega, 1.0)?;
    let g0 = resolver.float("g0", args.g0, 0.1)?;
    let z_re = resolver.float("z-re", args.z_re, 1.0)?;
    let z_im = resolver.float("z-im", args.z_im, 0.0)?;
    DephasingParams::new(epsilon, omega, g0, Complex64::new(z_re, z_im))
        .map_err(|e| CliError::usage(e.to_string()))
}

#[derive(Args)]
struct AmplitudeArgs {
    /// Equal-weight superposition amplitudes (the default)
    #[arg(long, conflicts_with_all = ["b1_re", "b1_im", "b2_re", "b2_im"])]
    equal_weights: bool,
    /// First superposition amplitude, real part
    #[arg(long)]
    b1_re: Option<f64>,
    /// First superposition amplitude, imaginary part
    #[arg(long)]
    b1_im: Option<f64>,
    /// Second superposition amplitude, real part
    #[arg(long)]
    b2_re: Option<f64>,
    /// Second superposition amplitude, imaginary part
    #[arg(long)]
    b2_im: Option<f64>,
}

/// Resolve amplitudes, normalize them, and record the normalized values.
fn resolve_amplitudes(
    resolver: &mut Resolver,
    args: &AmplitudeArgs,
) -> Result<(Complex64, Complex64), CliError> {
    let equal = resolver
        .resolve_opt(
            "equal-weights",
            if args.equal_weights { Some(true) } else { None },
        )?
        .unwrap_or(false);
    let b1_re = resolver.resolve_opt("b1-re", args.b1_re)?;
    let b1_im = resolver.resolve_opt("b1-im", args.b1_im)?;
    let b2_re = resolver.resolve_opt("b2-re", args.b2_re)?;
    let b2_im = resolver.resolve_opt("b2-im", args.b2_im)?;
    let explicit = [b1_re, b1_im, b2_re, b2_im].iter().any(Option::is_some);
    if equal && explicit {
        return Err(CliError::usage(
            "--equal-weights conflicts with explicit amplitude values",
        ));
    }
    let (b1, b2) = if explicit {
        (
            Complex64::new(b1_re.unwrap_or(0.0), b1_im.unwrap_or(0.0)),
            Complex64::new(b2_re.unwrap_or(0.0), b2_im.unwrap_or(0.0)),
        )
    } else {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        (Complex64::new(r, 0.0), Complex64::new(r, 0.0))
    };
    let norm = (b1.norm_sqr() + b2.norm_sqr()).sqrt();
    if !(norm.is_finite() && norm > 0.0) {
        return Err(CliError::usage("amplitudes must have a nonzero norm"));
    }
    let (b1, b2) = (b1 / norm, b2 / norm);
    resolver.record_float("b1-re", b1.re);
    resolver.record_float("b1-im", b1.im);
    resolver.record_float("b2-re", b2.re);
    resolver.record_float("b2-im", b2.im);
    Ok((b1, b2))
}

fn parse_family(raw: &str) -> Result<StateFamily, CliError> {
    StateFamily::from_str(raw).map_err(CliError::usage)
}

fn resolve_out(resolver: &mut Resolver, flag: Option<PathBuf>) -> Result<PathBuf, CliError> {
    let out: String = resolver.required(
        "out",
        flag.map(|p| p.to_string_lossy().into_owned()),
    )?;
    Ok(PathBuf::from(out))
}

fn positive_samples(samples: usize) -> Result<usize, CliError> {
    if samples == 0 {
        return Err(CliError::usage("--samples must be at least 1"));
    }
    Ok(samples)
}

fn write_csv(path: &Path, header: &[&str], rows: Vec<Vec<String>>) -> Result<(), CliError> {
    let mut text = String::new();
    text.push_str(&header.join(","));
    text.push('\n');
    for row in rows {
        text.push_str(&row.join(","));
        text.push('\n');
    }
    fs::write(path, text)
        .map_err(|e| CliError::runtime(format!("cannot write {}: {e}", path.display())))
}

#[derive(Args)]
struct TimetraceArgs {
    /// Config file with keys mirroring the flags below
    #[arg(long)]
    config: Option<PathBuf>,
    /// Which dynamics: dephasing | spinstar
    #[arg(long)]
    model: Option<String>,
    /// Comma-separated correlation parameters, each in [0, 1]
    #[arg(long)]
    lambda: Option<String>,
    #[command(flatten)]
    amplitudes: AmplitudeArgs,
    /// State family: original | swapped | sigmax | haar
    #[arg(long)]
    family: Option<String>,
    /// Seed for Haar-random unitaries
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    physics: DephasingPhysicsArgs,
    /// Bath size (spinstar model)
    #[arg(long)]
    n_bath: Option<usize>,
    /// Spin-star coupling strength
    #[arg(long)]
    a0: Option<f64>,
    /// Number of grid times in [0, t-max)
    #[arg(long)]
    time_points: Option<usize>,
    /// End of the time grid (exclusive)
    #[arg(long)]
    t_max: Option<f64>,
    /// Output CSV path
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run_timetrace(args: TimetraceArgs) -> Result<(), CliError> {
    let mut resolver = Resolver::new(args.config.as_deref(), "timetrace")?;
    let model: String = resolver.value("model", args.model, "dephasing".to_string())?;
    if model != "dephasing" && model != "spinstar" {
        return Err(CliError::usage(format!(
            "unknown model '{model}' (expected dephasing|spinstar)"
        )));
    }
    let family = parse_family(&resolver.value("family", args.family, "original".to_string())?)?;

    let lambda_raw: String = resolver
        .resolve_opt("lambda", args.lambda)?
        .unwrap_or_else(|| "0.1".to_string());
    let mut lambdas = Vec::new();
    for piece in lambda_raw.split(',') {
        let value: f64 = piece
            .trim()
            .parse()
            .map_err(|e| CliError::usage(format!("bad --lambda entry '{piece}': {e}")))?;
        if !(0.0..=1.0).contains(&value) {
            return Err(CliError::usage(format!(
                "--lambda entry {value} outside [0, 1]"
            )));
        }
        lambdas.push(value);
    }
    resolver.record_float_list("lambda", &lambdas);

    let (b1, b2) = resolve_amplitudes(&mut resolver, &args.amplitudes)?;
    let seed: u64 = resolver.value("seed", args.seed, 42)?;
    let time_points: usize = resolver.value("time-points", args.time_points, DEFAULT_TIME_POINTS)?;

    enum Sweep {
        Dephasing(DephasingSweep<f64>),
        SpinStar(SpinStarSweep<f64>),
    }

    let (sweep, out) = if model == "dephasing" {
        let params = resolve_dephasing_params(&mut resolver, &args.physics)?;
        let t_max = args_t_max(&mut resolver, args.t_max, default_dephasing_t_max::<f64>())?;
        let out = resolve_out(&mut resolver, args.out)?;
        let times = ExperimentConfig::<f64>::uniform_time_grid(t_max, time_points)
            .map_err(|e| CliError::usage(e.to_string()))?;
        (Sweep::Dephasing(DephasingSweep::new(params, times)), out)
    } else {
        let params = resolve_spinstar_params(&mut resolver, args.a0, args.n_bath)?;
        let t_max = args_t_max(&mut resolver, args.t_max, default_spinstar_t_max(&params))?;
        let out = resolve_out(&mut resolver, args.out)?;
        let times = ExperimentConfig::<f64>::uniform_time_grid(t_max, time_points)
            .map_err(|e| CliError::usage(e.to_string()))?;
        (Sweep::SpinStar(SpinStarSweep::new(params, times)?), out)
    };
    let manifest = resolver.finish()?;

    let header = ["lambda", "t", "delta_T", "delta_B", "delta_H", "delta_J"];
    let mut rows = Vec::new();
    for (lambda_index, &lambda) in lambdas.iter().enumerate() {
        let mut rng = sample_rng(seed, lambda_index, 0);
        let spec = family_spec(family, b1, b2, lambda, Some(&mut rng))?;
        let (times, traces) = match &sweep {
            Sweep::Dephasing(s) => (s.times().to_vec(), delta_traces(s, &spec)?),
            Sweep::SpinStar(s) => (s.times().to_vec(), delta_traces(s, &spec)?),
        };
        for (i, &t) in times.iter().enumerate() {
            rows.push(vec![
                format_float(lambda),
                format_float(t),
                format_float(traces[0][i]),
                format_float(traces[1][i]),
                format_float(traces[2][i]),
                format_float(traces[3][i]),
            ]);
        }
    }
    write_csv(&out, &header, rows)?;
    write_manifest(&out, &manifest)?;
    Ok(())
}

fn args_t_max(
    resolver: &mut Resolver,
    flag: Option<f64>,
    default: f64,
) -> Result<f64, CliError> {
    let t_max = resolver.float_unrecorded("t-max", flag)?.unwrap_or(default);
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(CliError::usage("--t-max must be positive"));
    }
    resolver.record_float("t-max", t_max);
    Ok(t_max)
}

fn resolve_spinstar_params(
    resolver: &mut Resolver,
    a0_flag: Option<f64>,
    n_bath_flag: Option<usize>,
) -> Result<SpinStarParams<f64>, CliError> {
    let n_bath: usize = resolver.value("n-bath", n_bath_flag, 20)?;
    let a0 = resolver.float("a0", a0_flag, 1.0)?;
    SpinStarParams::new(a0, n_bath).map_err(|e| CliError::usage(e.to_string()))
}

#[derive(Args)]
struct FrequencyArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    /// State family: original | swapped | sigmax | haar
    #[arg(long)]
    family: Option<String>,
    /// Random preparations per lambda
    #[arg(long)]
    samples: Option<usize>,
    /// Master seed of the sample streams
    #[arg(long)]
    seed: Option<u64>,
    /// Lambda grid resolution over [0, 1]
    #[arg(long)]
    lambda_points: Option<usize>,
    /// Number of grid times in [0, t-max)
    #[arg(long)]
    time_points: Option<usize>,
    /// End of the time grid (exclusive)
    #[arg(long)]
    t_max: Option<f64>,
    /// Smallest distance change counted as an increase
    #[arg(long)]
    increase_tolerance: Option<f64>,
    #[command(flatten)]
    physics: DephasingPhysicsArgs,
    /// Output CSV path
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run_frequency(args: FrequencyArgs) -> Result<(), CliError> {
    let mut resolver = Resolver::new(args.config.as_deref(), "frequency")?;
    let family = parse_family(&resolver.required::<String>("family", args.family)?)?;
    let samples = positive_samples(resolver.value("samples", args.samples, DEFAULT_SAMPLES)?)?;
    let seed: u64 = resolver.value("seed", args.seed, 42)?;
    let lambda_points: usize =
        resolver.value("lambda-points", args.lambda_points, DEFAULT_LAMBDA_POINTS)?;
    let time_points: usize = resolver.value("time-points", args.time_points, DEFAULT_TIME_POINTS)?;
    let t_max = args_t_max(&mut resolver, args.t_max, default_dephasing_t_max::<f64>())?;
    let tolerance = resolver.float(
        "increase-tolerance",
        args.increase_tolerance,
        default_increase_tolerance::<f64>(),
    )?;
    let params = resolve_dephasing_params(&mut resolver, &args.physics)?;
    let out = resolve_out(&mut resolver, args.out)?;
    let manifest = resolver.finish()?;

    let config = build_config(samples, seed, lambda_points, t_max, time_points, tolerance)?;
    let sweep = DephasingSweep::from_config(params, &config);
    let curve = frequency_curve(&sweep, family, &config)?;

    let header = ["lambda", "f_T", "f_B", "f_H", "f_J", "samples", "seed"];
    let rows = curve
        .lambdas
        .iter()
        .enumerate()
        .map(|(i, &lambda)| {
            vec![
                format_float(lambda),
                format_float(curve.frequencies[0][i]),
                format_float(curve.frequencies[1][i]),
                format_float(curve.frequencies[2][i]),
                format_float(curve.frequencies[3][i]),
                samples.to_string(),
                seed.to_string(),
            ]
        })
        .collect();
    write_csv(&out, &header, rows)?;
    write_manifest(&out, &manifest)?;
    Ok(())
}

fn build_config(
    samples: usize,
    seed: u64,
    lambda_points: usize,
    t_max: f64,
    time_points: usize,
    tolerance: f64,
) -> Result<ExperimentConfig<f64>, CliError> {
    let lambda_grid = ExperimentConfig::<f64>::uniform_lambda_grid(lambda_points)
        .map_err(|e| CliError::usage(e.to_string()))?;
    let time_grid = ExperimentConfig::<f64>::uniform_time_grid(t_max, time_points)
        .map_err(|e| CliError::usage(e.to_string()))?;
    ExperimentConfig::new(samples, seed, lambda_grid, time_grid, tolerance)
        .map_err(|e| CliError::usage(e.to_string()))
}

#[derive(Args)]
struct ConcurrenceArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    /// Lambda grid resolution over [0, 1]
    #[arg(long)]
    lambda_points: Option<usize>,
    /// Number of grid times in [0, t-max)
    #[arg(long)]
    time_points: Option<usize>,
    /// End of the time grid (exclusive)
    #[arg(long)]
    t_max: Option<f64>,
    /// Smallest concurrence gain counted as an increase
    #[arg(long)]
    increase_tolerance: Option<f64>,
    #[command(flatten)]
    amplitudes: AmplitudeArgs,
    #[command(flatten)]
    physics: DephasingPhysicsArgs,
    /// Output CSV path (a `.summary.csv` sibling carries threshold_lambda)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run_concurrence(args: ConcurrenceArgs) -> Result<(), CliError> {
    let mut resolver = Resolver::new(args.config.as_deref(), "concurrence")?;
    let lambda_points: usize =
        resolver.value("lambda-points", args.lambda_points, DEFAULT_LAMBDA_POINTS)?;
    let time_points: usize = resolver.value("time-points", args.time_points, DEFAULT_TIME_POINTS)?;
    let t_max = args_t_max(&mut resolver, args.t_max, default_dephasing_t_max::<f64>())?;
    let tolerance = resolver.float(
        "increase-tolerance",
        args.increase_tolerance,
        default_increase_tolerance::<f64>(),
    )?;
    let (b1, b2) = resolve_amplitudes(&mut resolver, &args.amplitudes)?;
    let params = resolve_dephasing_params(&mut resolver, &args.physics)?;
    let out = resolve_out(&mut resolver, args.out)?;
    let manifest = resolver.finish()?;

    let config = build_config(1, 0, lambda_points, t_max, time_points, tolerance)?;
    let map = concurrence_map(&params, b1, b2, &config)?;

    let mut rows = Vec::new();
    for (li, &lambda) in map.lambdas.iter().enumerate() {
        for (ti, &t) in map.times.iter().enumerate() {
            rows.push(vec![
                format_float(lambda),
                format_float(t),
                format_float(map.values[li][ti]),
            ]);
        }
    }
    write_csv(&out, &["lambda", "t", "concurrence"], rows)?;
    let summary = out.with_extension("summary.csv");
    write_csv(
        &summary,
        &["threshold_lambda"],
        vec![vec![format_float(map.threshold_lambda)]],
    )?;
    write_manifest(&out, &manifest)?;
    println!("threshold_lambda = {}", format_float(map.threshold_lambda));
    Ok(())
}

#[derive(Args)]
struct SpinstarArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    /// Number of bath spins (at least 2)
    #[arg(long)]
    n_bath: Option<usize>,
    /// Coupling strength
    #[arg(long)]
    a0: Option<f64>,
    /// Random preparations per lambda
    #[arg(long)]
    samples: Option<usize>,
    /// Master seed of the sample streams
    #[arg(long)]
    seed: Option<u64>,
    /// End of the time grid (exclusive); default spans several Rabi periods
    #[arg(long)]
    t_max: Option<f64>,
    /// Lambda grid resolution over [0, 1]
    #[arg(long)]
    lambda_points: Option<usize>,
    /// Number of grid times in [0, t-max)
    #[arg(long)]
    time_points: Option<usize>,
    /// Smallest distance change counted as an increase
    #[arg(long)]
    increase_tolerance: Option<f64>,
    /// Output CSV path
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run_spinstar(args: SpinstarArgs) -> Result<(), CliError> {
    let mut resolver = Resolver::new(args.config.as_deref(), "spinstar")?;
    let params = resolve_spinstar_params(&mut resolver, args.a0, args.n_bath)?;
    let samples = positive_samples(resolver.value("samples", args.samples, DEFAULT_SAMPLES)?)?;
    let seed: u64 = resolver.value("seed", args.seed, 42)?;
    let t_max = args_t_max(&mut resolver, args.t_max, default_spinstar_t_max(&params))?;
    let lambda_points: usize =
        resolver.value("lambda-points", args.lambda_points, DEFAULT_LAMBDA_POINTS)?;
    let time_points: usize = resolver.value("time-points", args.time_points, DEFAULT_TIME_POINTS)?;
    let tolerance = resolver.float(
        "increase-tolerance",
        args.increase_tolerance,
        default_increase_tolerance::<f64>(),
    )?;
    let out = resolve_out(&mut resolver, args.out)?;
    let manifest = resolver.finish()?;

    let config = build_config(samples, seed, lambda_points, t_max, time_points, tolerance)?;
    let sweep = SpinStarSweep::from_config(params, &config)?;
    let curve = frequency_curve(&sweep, StateFamily::HaarRandom, &config)?;

    let header = [
        "lambda", "f_T", "f_B", "f_H", "f_J", "n_bath", "a0", "samples", "seed",
    ];
    let rows = curve
        .lambdas
        .iter()
        .enumerate()
        .map(|(i, &lambda)| {
            vec![
                format_float(lambda),
                format_float(curve.frequencies[0][i]),
                format_float(curve.frequencies[1][i]),
                format_float(curve.frequencies[2][i]),
                format_float(curve.frequencies[3][i]),
                params.bath_size.to_string(),
                format_float(params.coupling),
                samples.to_string(),
                seed.to_string(),
            ]
        })
        .collect();
    write_csv(&out, &header, rows)?;
    write_manifest(&out, &manifest)?;
    Ok(())
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    /// Which suite: oracles | properties | bounds | all
    #[arg(long)]
    suite: Option<String>,
    /// Master seed of the verification draws
    #[arg(long)]
    seed: Option<u64>,
}

fn run_verify(args: VerifyArgs) -> Result<bool, CliError> {
    let mut resolver = Resolver::new(args.config.as_deref(), "verify")?;
    let suite: String = resolver.value("suite", args.suite, "all".to_string())?;
    let seed: u64 = resolver.value("seed", args.seed, 42)?;
    resolver.finish()?;

    let selected: Vec<&str> = match suite.as_str() {
        "oracles" => vec!["oracles"],
        "properties" => vec!["properties"],
        "bounds" => vec!["bounds"],
        "all" => vec!["oracles", "properties", "bounds"],
        other => {
            return Err(CliError::usage(format!(
                "unknown suite '{other}' (expected oracles|properties|bounds|all)"
            )))
        }
    };

    let mut all_passed = true;
    for name in selected {
        let report = match name {
            "oracles" => verify::oracle_suite(seed)?,
            "properties" => verify::property_suite(seed)?,
            _ => verify::bound_suite(seed)?,
        };
        for check in &report.checks {
            println!(
                "[{}] {} {} ({})",
                report.suite,
                if check.passed { "PASS" } else { "FAIL" },
                check.name,
                check.detail
            );
        }
        let failures = report.failures();
        println!(
            "[{}] {}/{} checks passed",
            report.suite,
            report.checks.len() - failures,
            report.checks.len()
        );
        all_passed &= failures == 0;
    }
    Ok(all_passed)
}

fn init_thread_pool() -> Result<(), CliError> {
    if let Ok(raw) = std::env::var("CORRWITNESS_THREADS") {
        let threads: usize = raw.parse().map_err(|_| {
            CliError::usage(format!(
                "CORRWITNESS_THREADS must be a positive integer, got '{raw}'"
            ))
        })?;
        if threads == 0 {
            return Err(CliError::usage("CORRWITNESS_THREADS must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::runtime(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn run() -> Result<bool, CliError> {
    init_thread_pool()?;
    match Cli::parse().command {
        Command::Timetrace(args) => run_timetrace(args).map(|_| true),
        Command::Frequency(args) => run_frequency(args).map(|_| true),
        Command::Concurrence(args) => run_concurrence(args).map(|_| true),
        Command::Spinstar(args) => run_spinstar(args).map(|_| true),
        Command::Verify(args) => run_verify(args),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.usage { 2 } else { 1 })
        }
    }
}
