//! Seeded Monte Carlo sweep engines: Haar-random unitaries and amplitudes,
//! distance-change traces over time grids, frequency-of-increase curves,
//! concurrence maps, and the correlation-witness bound sweep.
//!
//! Reproducibility contract: every sample's random stream is a pure function
//! of `(master_seed, lambda index, sample index)`, carried by the ChaCha
//! stream counter, and all parallel reductions are integer counts. A sweep
//! therefore produces bit-identical results for any thread count.

use ndarray::{Array1, Array2};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::dephasing::{
    family_spec, total_state_fock, CoherenceKernel, CorrelatedStateSpec, DephasingModel,
    DephasingParams, FockCutoff, SpecCoefficients, StateFamily,
};
use crate::distance::{all_measures, trace_distance, witness_bound_rhs, MeasureKind};
use crate::error::{Error, Result};
use crate::quantum::{purity, Bipartition, DensityMatrix};
use crate::scalar::{c, Scalar};
use crate::spinstar::{SpinStarModel, SpinStarParams};

/// Paper-scale sample count per lambda.
pub const DEFAULT_SAMPLES: usize = 50_000;
/// Default lambda grid resolution (inclusive endpoints).
pub const DEFAULT_LAMBDA_POINTS: usize = 51;
/// Default time grid resolution.
pub const DEFAULT_TIME_POINTS: usize = 2000;

/// Threshold separating genuine distance increases from eigensolver noise.
pub fn default_increase_tolerance<T: Scalar>() -> T {
    T::from_f64_lossy(1e-9)
}

/// One full period of the dephasing dynamics.
pub fn default_dephasing_t_max<T: Scalar>() -> T {
    T::from_f64_lossy(2.0) * T::PI()
}

/// Several Rabi periods of the dominant spin-star block.
pub fn default_spinstar_t_max<T: Scalar>(params: &SpinStarParams<T>) -> T {
    let n = T::from_usize(params.bath_size).expect("bath size fits scalar");
    T::from_f64_lossy(10.0) * T::PI() / (params.coupling.abs() * n.sqrt())
}

/// Sampling protocol of a sweep: sample count, seed, grids, tolerance.
#[derive(Debug, Clone)]
pub struct ExperimentConfig<T: Scalar> {
    pub samples: usize,
    pub master_seed: u64,
    pub lambda_grid: Vec<T>,
    pub time_grid: Vec<T>,
    pub increase_tolerance: T,
}

impl<T: Scalar> ExperimentConfig<T> {
    pub fn new(
        samples: usize,
        master_seed: u64,
        lambda_grid: Vec<T>,
        time_grid: Vec<T>,
        increase_tolerance: T,
    ) -> Result<Self> {
        if samples == 0 {
            return Err(Error::OutOfRange {
                what: "samples",
                value: 0.0,
                min: 1.0,
                max: f64::INFINITY,
            });
        }
        if increase_tolerance <= T::zero() {
            return Err(Error::OutOfRange {
                what: "increase_tolerance",
                value: increase_tolerance.to_f64().unwrap_or(f64::NAN),
                min: f64::MIN_POSITIVE,
                max: f64::INFINITY,
            });
        }
        for (name, grid) in [("lambda_grid", &lambda_grid), ("time_grid", &time_grid)] {
            if grid.is_empty() {
                return Err(Error::Inconsistent(format!("{name} is empty")));
            }
            if grid.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Inconsistent(format!(
                    "{name} is not strictly increasing"
                )));
            }
        }
        Ok(Self {
            samples,
            master_seed,
            lambda_grid,
            time_grid,
            increase_tolerance,
        })
    }

    /// `points` evenly spaced values covering [0, 1] inclusive.
    pub fn uniform_lambda_grid(points: usize) -> Result<Vec<T>> {
        if points < 2 {
            return Err(Error::OutOfRange {
                what: "lambda points",
                value: points as f64,
                min: 2.0,
                max: f64::INFINITY,
            });
        }
        let denom = T::from_usize(points - 1).expect("points fit scalar");
        Ok((0..points)
            .map(|i| T::from_usize(i).expect("index fits scalar") / denom)
            .collect())
    }

    /// `points` evenly spaced values covering [0, t_max).
    pub fn uniform_time_grid(t_max: T, points: usize) -> Result<Vec<T>> {
        if points == 0 || t_max <= T::zero() {
            return Err(Error::OutOfRange {
                what: "time grid",
                value: points as f64,
                min: 1.0,
                max: f64::INFINITY,
            });
        }
        let n = T::from_usize(points).expect("points fit scalar");
        Ok((0..points)
            .map(|i| T::from_usize(i).expect("index fits scalar") / n * t_max)
            .collect())
    }
}

/// Deterministic per-sample stream: the master seed keys the cipher and the
/// (lambda, sample) pair selects the stream, so scheduling cannot change any
/// draw.
pub fn sample_rng(master_seed: u64, lambda_index: usize, sample_index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(((lambda_index as u64) << 32) | sample_index as u64);
    rng
}

/// Haar-distributed unitary of arbitrary dimension: Gram-Schmidt on a
/// complex Gaussian matrix, with the R-diagonal kept real positive so the
/// factorization is unique.
pub fn haar_unitary_of_dim<T, R>(rng: &mut R, dim: usize) -> Array2<Complex<T>>
where
    T: Scalar,
    R: Rng + ?Sized,
    StandardNormal: Distribution<T>,
{
    let mut columns: Vec<Array1<Complex<T>>> = Vec::with_capacity(dim);
    for _ in 0..dim {
        let mut v = Array1::from_shape_fn(dim, |_| {
            c(rng.sample(StandardNormal), rng.sample(StandardNormal))
        });
        for q in &columns {
            let overlap: Complex<T> = q.iter().zip(v.iter()).map(|(a, b)| a.conj() * *b).sum();
            v = Array1::from_shape_fn(dim, |i| v[i] - q[i] * overlap);
        }
        let norm: T = v.iter().map(|x| x.norm_sqr()).sum::<T>().sqrt();
        columns.push(v.mapv(|x| x / c(norm, T::zero())));
    }
    Array2::from_shape_fn((dim, dim), |(i, j)| columns[j][i])
}

/// Haar-distributed 2x2 local unitary.
pub fn haar_unitary<T, R>(rng: &mut R) -> Array2<Complex<T>>
where
    T: Scalar,
    R: Rng + ?Sized,
    StandardNormal: Distribution<T>,
{
    haar_unitary_of_dim(rng, 2)
}

/// Superposition amplitudes uniform on the unit sphere of C^2.
pub fn random_amplitudes<T, R>(rng: &mut R) -> (Complex<T>, Complex<T>)
where
    T: Scalar,
    R: Rng + ?Sized,
    StandardNormal: Distribution<T>,
{
    let b1 = c::<T>(rng.sample(StandardNormal), rng.sample(StandardNormal));
    let b2 = c::<T>(rng.sample(StandardNormal), rng.sample(StandardNormal));
    let norm = (b1.norm_sqr() + b2.norm_sqr()).sqrt();
    let scale = c(T::one() / norm, T::zero());
    (b1 * scale, b2 * scale)
}

/// Reduced dynamics evaluated over a fixed time grid, with whatever
/// per-spec and per-time precomputation the model affords.
pub trait SweepModel<T: Scalar>: Sync {
    type Prepared: Send + Sync;

    fn times(&self) -> &[T];
    fn prepare(&self, spec: &CorrelatedStateSpec<T>) -> Result<Self::Prepared>;
    fn state_at_index(&self, prepared: &Self::Prepared, index: usize) -> Result<DensityMatrix<T>>;
    fn state_at_time(&self, prepared: &Self::Prepared, t: T) -> Result<DensityMatrix<T>>;
    fn curve_family(&self, family: StateFamily) -> CurveFamily;
}

/// Dephasing dynamics over a grid. The coherence kernels (field overlaps and
/// phases) depend only on the grid, so they are shared by every sample.
pub struct DephasingSweep<T: Scalar> {
    model: DephasingModel<T>,
    times: Vec<T>,
    kernels: Vec<CoherenceKernel<T>>,
}

impl<T: Scalar> DephasingSweep<T> {
    pub fn new(params: DephasingParams<T>, times: Vec<T>) -> Self {
        let model = DephasingModel::new(params);
        let kernels = times.iter().map(|&t| model.kernel(t)).collect();
        Self {
            model,
            times,
            kernels,
        }
    }

    pub fn from_config(params: DephasingParams<T>, config: &ExperimentConfig<T>) -> Self {
        Self::new(params, config.time_grid.clone())
    }

    pub fn model(&self) -> &DephasingModel<T> {
        &self.model
    }
}

impl<T: Scalar> SweepModel<T> for DephasingSweep<T> {
    type Prepared = SpecCoefficients<T>;

    fn times(&self) -> &[T] {
        &self.times
    }

    fn prepare(&self, spec: &CorrelatedStateSpec<T>) -> Result<Self::Prepared> {
        Ok(self.model.spec_coefficients(spec))
    }

    fn state_at_index(&self, prepared: &Self::Prepared, index: usize) -> Result<DensityMatrix<T>> {
        crate::dephasing::reduced_from_kernel(prepared, &self.kernels[index])
    }

    fn state_at_time(&self, prepared: &Self::Prepared, t: T) -> Result<DensityMatrix<T>> {
        crate::dephasing::reduced_from_kernel(prepared, &self.model.kernel(t))
    }

    fn curve_family(&self, family: StateFamily) -> CurveFamily {
        CurveFamily::Dephasing(family)
    }
}

/// Spin-star dynamics over a grid. The 5x5 eigenbasis and the per-time phase
/// factors are shared by every sample.
pub struct SpinStarSweep<T: Scalar> {
    model: SpinStarModel<T>,
    times: Vec<T>,
    phases: Vec<Array1<Complex<T>>>,
}

impl<T: Scalar> SpinStarSweep<T> {
    pub fn new(params: SpinStarParams<T>, times: Vec<T>) -> Result<Self> {
        let model = SpinStarModel::new(params)?;
        let phases = times
            .iter()
            .map(|&t| model.propagator().phase_factors(t))
            .collect();
        Ok(Self {
            model,
            times,
            phases,
        })
    }

    pub fn from_config(params: SpinStarParams<T>, config: &ExperimentConfig<T>) -> Result<Self> {
        Self::new(params, config.time_grid.clone())
    }

    pub fn model(&self) -> &SpinStarModel<T> {
        &self.model
    }
}

impl<T: Scalar> SweepModel<T> for SpinStarSweep<T> {
    type Prepared = Array1<Complex<T>>;

    fn times(&self) -> &[T] {
        &self.times
    }

    fn prepare(&self, spec: &CorrelatedStateSpec<T>) -> Result<Self::Prepared> {
        self.model
            .propagator()
            .to_eigenbasis(&self.model.initial_subspace_state(spec))
    }

    fn state_at_index(&self, prepared: &Self::Prepared, index: usize) -> Result<DensityMatrix<T>> {
        let psi = self
            .model
            .propagator()
            .apply_phases(prepared, &self.phases[index]);
        self.model.reduce_subspace_vector(&psi)
    }

    fn state_at_time(&self, prepared: &Self::Prepared, t: T) -> Result<DensityMatrix<T>> {
        let psi = self.model.propagator().evolve_prepared(prepared, t);
        self.model.reduce_subspace_vector(&psi)
    }

    fn curve_family(&self, _family: StateFamily) -> CurveFamily {
        CurveFamily::SpinStar
    }
}

/// Distance change over a time grid for one measure and one spec.
#[derive(Debug, Clone)]
pub struct TimeTrace<T: Scalar> {
    pub measure: MeasureKind,
    pub lambda: T,
    pub times: Vec<T>,
    pub delta_values: Vec<T>,
}

/// Distance changes for all four measures at once (shared eigenwork), each
/// relative to the t = 0 distance between the lambda-correlated state and
/// its lambda = 0 partner.
pub fn delta_traces<T, M>(model: &M, spec: &CorrelatedStateSpec<T>) -> Result<[Vec<T>; 4]>
where
    T: Scalar,
    M: SweepModel<T>,
{
    let prepared = model.prepare(spec)?;
    let prepared_ref = model.prepare(&spec.with_lambda_zero())?;
    let base = all_measures(
        &model.state_at_time(&prepared, T::zero())?,
        &model.state_at_time(&prepared_ref, T::zero())?,
    )?;
    let n = model.times().len();
    let mut out = [
        Vec::with_capacity(n),
        Vec::with_capacity(n),
        Vec::with_capacity(n),
        Vec::with_capacity(n),
    ];
    for index in 0..n {
        let rho = model.state_at_index(&prepared, index)?;
        let rho_ref = model.state_at_index(&prepared_ref, index)?;
        let d = all_measures(&rho, &rho_ref)?;
        for k in 0..4 {
            out[k].push(d[k] - base[k]);
        }
    }
    Ok(out)
}

/// Distance change of a single measure over the model's time grid. The
/// lambda = 0 reference shares the spec's amplitudes and unitary.
pub fn time_trace<T, M>(
    model: &M,
    spec: &CorrelatedStateSpec<T>,
    measure: MeasureKind,
) -> Result<TimeTrace<T>>
where
    T: Scalar,
    M: SweepModel<T>,
{
    let traces = delta_traces(model, spec)?;
    Ok(TimeTrace {
        measure,
        lambda: spec.lambda(),
        times: model.times().to_vec(),
        delta_values: traces[measure.index()].clone(),
    })
}

/// True iff some grid value exceeds the tolerance.
pub fn has_increase<T: Scalar>(trace: &TimeTrace<T>, tolerance: T) -> bool {
    trace.delta_values.iter().any(|&d| d > tolerance)
}

/// Per-measure increase detection with early exit once all four measures
/// have shown an increase.
pub fn increase_flags<T, M>(
    model: &M,
    spec: &CorrelatedStateSpec<T>,
    tolerance: T,
) -> Result<[bool; 4]>
where
    T: Scalar,
    M: SweepModel<T>,
{
    if spec.lambda() == T::zero() {
        // The state and its reference coincide exactly.
        return Ok([false; 4]);
    }
    let prepared = model.prepare(spec)?;
    let prepared_ref = model.prepare(&spec.with_lambda_zero())?;
    let base = all_measures(
        &model.state_at_time(&prepared, T::zero())?,
        &model.state_at_time(&prepared_ref, T::zero())?,
    )?;
    let mut flags = [false; 4];
    for index in 0..model.times().len() {
        let rho = model.state_at_index(&prepared, index)?;
        let rho_ref = model.state_at_index(&prepared_ref, index)?;
        let d = all_measures(&rho, &rho_ref)?;
        for k in 0..4 {
            if d[k] - base[k] > tolerance {
                flags[k] = true;
            }
        }
        if flags.iter().all(|&f| f) {
            break;
        }
    }
    Ok(flags)
}

/// Which sweep a frequency curve belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveFamily {
    Dephasing(StateFamily),
    SpinStar,
}

/// Frequency of increase per measure over a lambda grid.
#[derive(Debug, Clone)]
pub struct FrequencyCurve<T: Scalar> {
    pub family: CurveFamily,
    pub lambdas: Vec<T>,
    /// Indexed by [`MeasureKind::index`], then by lambda.
    pub frequencies: [Vec<T>; 4],
    pub samples: usize,
    pub master_seed: u64,
}

impl<T: Scalar> FrequencyCurve<T> {
    pub fn frequency(&self, measure: MeasureKind, lambda_index: usize) -> T {
        self.frequencies[measure.index()][lambda_index]
    }
}

/// Fraction of sampled specs whose distance trace increases, for each
/// measure and each lambda. Samples are drawn on deterministic per-index
/// streams and reduced by integer counting, so the curve is reproducible
/// under any parallelism.
pub fn frequency_curve<T, M>(
    model: &M,
    family: StateFamily,
    config: &ExperimentConfig<T>,
) -> Result<FrequencyCurve<T>>
where
    T: Scalar,
    M: SweepModel<T>,
    StandardNormal: Distribution<T>,
{
    let mut frequencies: [Vec<T>; 4] = Default::default();
    let n_samples = T::from_usize(config.samples).expect("samples fit scalar");
    for (lambda_index, &lambda) in config.lambda_grid.iter().enumerate() {
        let counts = (0..config.samples)
            .into_par_iter()
            .map(|sample_index| -> Result<[u64; 4]> {
                let mut rng = sample_rng(config.master_seed, lambda_index, sample_index);
                let (b1, b2) = random_amplitudes::<T, _>(&mut rng);
                let spec = family_spec(family, b1, b2, lambda, Some(&mut rng))?;
                let flags = increase_flags(model, &spec, config.increase_tolerance)?;
                Ok(flags.map(u64::from))
            })
            .try_reduce(
                || [0u64; 4],
                |a, b| Ok([a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]),
            )?;
        for k in 0..4 {
            frequencies[k].push(T::from_u64(counts[k]).expect("count fits scalar") / n_samples);
        }
    }
    Ok(FrequencyCurve {
        family: model.curve_family(family),
        lambdas: config.lambda_grid.clone(),
        frequencies,
        samples: config.samples,
        master_seed: config.master_seed,
    })
}

/// Concurrence of the evolved total state over a (lambda, t) grid, plus the
/// largest lambda at which the concurrence still rises above its initial
/// value during the first half period.
#[derive(Debug, Clone)]
pub struct ConcurrenceMap<T: Scalar> {
    pub lambdas: Vec<T>,
    pub times: Vec<T>,
    /// `values[lambda_index][time_index]`.
    pub values: Vec<Vec<T>>,
    pub threshold_lambda: T,
}

/// Concurrence map of the dephasing model for fixed amplitudes. The total
/// state stays pure, so the concurrence comes directly from the purity of
/// the closed-form reduced state.
pub fn concurrence_map<T: Scalar>(
    params: &DephasingParams<T>,
    b1: Complex<T>,
    b2: Complex<T>,
    config: &ExperimentConfig<T>,
) -> Result<ConcurrenceMap<T>> {
    let model = DephasingModel::new(*params);
    let two = T::from_f64_lossy(2.0);
    let concurrence_of = |rho: &DensityMatrix<T>| -> T {
        (two * (T::one() - purity(rho))).max(T::zero()).sqrt()
    };
    let half_period = T::PI() / params.omega;

    let rows: Vec<(Vec<T>, bool)> = config
        .lambda_grid
        .par_iter()
        .map(|&lambda| -> Result<(Vec<T>, bool)> {
            let spec = CorrelatedStateSpec::new(b1, b2, lambda, crate::linalg::identity(2))?;
            let initial = concurrence_of(&model.reduced_state(&spec, T::zero())?);
            let mut row = Vec::with_capacity(config.time_grid.len());
            let mut rises = false;
            for &t in &config.time_grid {
                let value = concurrence_of(&model.reduced_state(&spec, t)?);
                if t <= half_period && value - initial > config.increase_tolerance {
                    rises = true;
                }
                row.push(value);
            }
            Ok((row, rises))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut threshold_lambda = T::zero();
    for (lambda, (_, rises)) in config.lambda_grid.iter().zip(rows.iter()) {
        if *rises {
            threshold_lambda = *lambda;
        }
    }
    Ok(ConcurrenceMap {
        lambdas: config.lambda_grid.clone(),
        times: config.time_grid.clone(),
        values: rows.into_iter().map(|(row, _)| row).collect(),
        threshold_lambda,
    })
}

/// One sampled case of the witness-bound sweep.
#[derive(Debug, Clone)]
pub struct WitnessBoundCase<T: Scalar> {
    pub lambda: T,
    pub max_delta_trace: T,
    pub bound_rhs: T,
    pub violation: bool,
}

/// Result of a witness-bound sweep: the trace-distance increase of every
/// sampled spec against the bound from its total-state correlations.
#[derive(Debug, Clone)]
pub struct WitnessBoundReport<T: Scalar> {
    pub cases: Vec<WitnessBoundCase<T>>,
    pub slack: T,
}

impl<T: Scalar> WitnessBoundReport<T> {
    pub fn violations(&self) -> usize {
        self.cases.iter().filter(|case| case.violation).count()
    }
}

/// For each lambda and sample: the maximal increase of the trace distance
/// between the reduced states must stay below the initial-correlation bound
/// evaluated on the truncated-Fock total states, up to `1e-8` slack.
pub fn witness_bound_sweep<T>(
    params: &DephasingParams<T>,
    family: StateFamily,
    config: &ExperimentConfig<T>,
    cutoff: FockCutoff,
) -> Result<WitnessBoundReport<T>>
where
    T: Scalar,
    StandardNormal: Distribution<T>,
{
    let slack = T::from_f64_lossy(1e-8);
    let sweep = DephasingSweep::new(*params, config.time_grid.clone());
    let part = Bipartition::new(2, cutoff.n_max + 1);
    let mut cases = Vec::with_capacity(config.lambda_grid.len() * config.samples);
    for (lambda_index, &lambda) in config.lambda_grid.iter().enumerate() {
        let mut batch = (0..config.samples)
            .into_par_iter()
            .map(|sample_index| -> Result<WitnessBoundCase<T>> {
                let mut rng = sample_rng(config.master_seed, lambda_index, sample_index);
                let (b1, b2) = random_amplitudes::<T, _>(&mut rng);
                let spec = family_spec(family, b1, b2, lambda, Some(&mut rng))?;
                let spec_ref = spec.with_lambda_zero();

                let prepared = sweep.prepare(&spec)?;
                let prepared_ref = sweep.prepare(&spec_ref)?;
                let base = trace_distance(
                    &sweep.state_at_time(&prepared, T::zero())?,
                    &sweep.state_at_time(&prepared_ref, T::zero())?,
                )?;
                let mut max_delta = T::zero();
                for index in 0..sweep.times().len() {
                    let d = trace_distance(
                        &sweep.state_at_index(&prepared, index)?,
                        &sweep.state_at_index(&prepared_ref, index)?,
                    )?;
                    if d - base > max_delta {
                        max_delta = d - base;
                    }
                }

                let rho_se = total_state_fock(params, &spec, cutoff)?.projector();
                let rho_se_ref = total_state_fock(params, &spec_ref, cutoff)?.projector();
                let bound = witness_bound_rhs(&rho_se, &rho_se_ref, part)?;
                Ok(WitnessBoundCase {
                    lambda,
                    max_delta_trace: max_delta,
                    bound_rhs: bound,
                    violation: max_delta > bound + slack,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        cases.append(&mut batch);
    }
    Ok(WitnessBoundReport { cases, slack })
}
