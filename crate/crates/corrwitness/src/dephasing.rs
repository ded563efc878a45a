//! Exact reduced dynamics of a two-level system coupled to a single bosonic
//! mode through `sigma_z`, for total initial states that superpose the field
//! vacuum with a coherent state.
//!
//! Two independent routes to the same reduced state live here:
//!
//! * a closed form for the coherence factor, obtained from the conditional
//!   displaced-oscillator evolution of each `sigma_z` branch;
//! * [`FockOracle`], which truncates the mode to a finite number basis,
//!   diagonalizes the full Hamiltonian and partial-traces the evolved state.
//!
//! The closed form carries the free-evolution phase `exp(-2 i epsilon t)`
//! between the branches. That phase is fixed by the oracle: both routes agree
//! to machine precision only with it included, so the implementation keeps
//! it (a common phase convention would drop out of any distance between two
//! states evolved through the same code path anyway).

use ndarray::{Array1, Array2};
use num_complex::Complex;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::distance::trace_distance;
use crate::error::{Error, Result};
use crate::linalg;
use crate::quantum::{
    Bipartition, DensityMatrix, HermitianOperator, Keep, Propagator, StateVector,
};
use crate::scalar::{c, tol, Scalar};

/// Physical constants of the dephasing model.
#[derive(Debug, Clone, Copy)]
pub struct DephasingParams<T: Scalar> {
    /// Energy splitting of the two-level system.
    pub epsilon: T,
    /// Mode frequency.
    pub omega: T,
    /// Coupling strength.
    pub g0: T,
    /// Coherent-state label of the correlated field component.
    pub z: Complex<T>,
}

impl<T: Scalar> DephasingParams<T> {
    pub fn new(epsilon: T, omega: T, g0: T, z: Complex<T>) -> Result<Self> {
        if omega <= T::zero() {
            return Err(Error::OutOfRange {
                what: "omega",
                value: omega.to_f64().unwrap_or(f64::NAN),
                min: f64::MIN_POSITIVE,
                max: f64::INFINITY,
            });
        }
        Ok(Self {
            epsilon,
            omega,
            g0,
            z,
        })
    }
}

impl<T: Scalar> Default for DephasingParams<T> {
    fn default() -> Self {
        Self {
            epsilon: T::one(),
            omega: T::one(),
            g0: T::from_f64_lossy(0.1),
            z: c(T::one(), T::zero()),
        }
    }
}

/// Full parameterization of a correlated total initial state: superposition
/// amplitudes, correlation parameter and the local unitary applied to the
/// system.
#[derive(Debug, Clone)]
pub struct CorrelatedStateSpec<T: Scalar> {
    b1: Complex<T>,
    b2: Complex<T>,
    lambda: T,
    unitary: Array2<Complex<T>>,
}

impl<T: Scalar> CorrelatedStateSpec<T> {
    pub fn new(
        b1: Complex<T>,
        b2: Complex<T>,
        lambda: T,
        unitary: Array2<Complex<T>>,
    ) -> Result<Self> {
        let norm_sq = b1.norm_sqr() + b2.norm_sqr();
        let dev = (norm_sq - T::one()).abs();
        if dev > tol::structure::<T>() {
            return Err(Error::NotNormalized {
                deviation: dev.to_f64().unwrap_or(f64::NAN),
            });
        }
        if lambda < T::zero() || lambda > T::one() {
            return Err(Error::OutOfRange {
                what: "lambda",
                value: lambda.to_f64().unwrap_or(f64::NAN),
                min: 0.0,
                max: 1.0,
            });
        }
        if unitary.nrows() != 2 || unitary.ncols() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: unitary.nrows().max(unitary.ncols()),
            });
        }
        let gram = linalg::adjoint(&unitary).dot(&unitary);
        let unit_dev = linalg::max_abs_diff(&gram, &linalg::identity(2));
        if unit_dev > tol::structure::<T>() {
            return Err(Error::NotUnitary {
                deviation: unit_dev.to_f64().unwrap_or(f64::NAN),
            });
        }
        let scale = c(T::one() / norm_sq.sqrt(), T::zero());
        Ok(Self {
            b1: b1 * scale,
            b2: b2 * scale,
            lambda,
            unitary,
        })
    }

    /// Same amplitudes and unitary with the correlation parameter set to
    /// zero: the uncorrelated reference partner.
    pub fn with_lambda_zero(&self) -> Self {
        Self {
            b1: self.b1,
            b2: self.b2,
            lambda: T::zero(),
            unitary: self.unitary.clone(),
        }
    }

    pub fn b1(&self) -> Complex<T> {
        self.b1
    }

    pub fn b2(&self) -> Complex<T> {
        self.b2
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    pub fn unitary(&self) -> &Array2<Complex<T>> {
        &self.unitary
    }
}

/// The three named preparations plus fully Haar-random local unitaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateFamily {
    Original,
    Swapped,
    SigmaX,
    HaarRandom,
}

impl StateFamily {
    pub const ALL: [StateFamily; 4] = [
        StateFamily::Original,
        StateFamily::Swapped,
        StateFamily::SigmaX,
        StateFamily::HaarRandom,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            StateFamily::Original => "original",
            StateFamily::Swapped => "swapped",
            StateFamily::SigmaX => "sigmax",
            StateFamily::HaarRandom => "haar",
        }
    }
}

impl std::str::FromStr for StateFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "original" => Ok(StateFamily::Original),
            "swapped" => Ok(StateFamily::Swapped),
            "sigmax" => Ok(StateFamily::SigmaX),
            "haar" => Ok(StateFamily::HaarRandom),
            other => Err(format!(
                "unknown family '{other}' (expected original|swapped|sigmax|haar)"
            )),
        }
    }
}

/// Build the spec realizing a named state family.
///
/// * `Original`: identity unitary, amplitudes as given.
/// * `Swapped`: field states exchanged between the branches.
/// * `SigmaX`: branches along the `sigma_x` eigenbasis.
/// * `HaarRandom`: Haar-distributed local unitary (requires `rng`).
pub fn family_spec<T, R>(
    family: StateFamily,
    b1: Complex<T>,
    b2: Complex<T>,
    lambda: T,
    rng: Option<&mut R>,
) -> Result<CorrelatedStateSpec<T>>
where
    T: Scalar,
    R: Rng + ?Sized,
    StandardNormal: Distribution<T>,
{
    let zero = T::zero();
    let one = T::one();
    match family {
        StateFamily::Original => {
            CorrelatedStateSpec::new(b1, b2, lambda, linalg::identity(2))
        }
        StateFamily::Swapped => {
            let mut u = Array2::zeros((2, 2));
            u[(0, 1)] = c(one, zero);
            u[(1, 0)] = c(one, zero);
            CorrelatedStateSpec::new(b2, b1, lambda, u)
        }
        StateFamily::SigmaX => {
            // Columns |-1_x> and |+1_x>; with the amplitudes swapped the
            // vacuum branch rides on b2 and the correlated branch on b1.
            let r = T::FRAC_1_SQRT_2();
            let mut u = Array2::zeros((2, 2));
            u[(0, 0)] = c(r, zero);
            u[(0, 1)] = c(r, zero);
            u[(1, 0)] = c(-r, zero);
            u[(1, 1)] = c(r, zero);
            CorrelatedStateSpec::new(b2, b1, lambda, u)
        }
        StateFamily::HaarRandom => {
            let rng = rng.ok_or(Error::RngRequired)?;
            let u = crate::experiments::haar_unitary::<T, R>(rng);
            CorrelatedStateSpec::new(b1, b2, lambda, u)
        }
    }
}

/// Overlap of two coherent states,
/// `<x|y> = exp(-|x|^2/2 - |y|^2/2 + conj(x) y)`.
pub fn coherent_overlap<T: Scalar>(x: Complex<T>, y: Complex<T>) -> Complex<T> {
    let half = T::from_f64_lossy(0.5);
    let exponent = x.conj() * y
        - c(half * x.norm_sqr() + half * y.norm_sqr(), T::zero());
    exponent.exp()
}

/// Conditional field displacement `alpha(t) = (g0/omega)(1 - e^{i omega t})`.
pub fn alpha<T: Scalar>(params: &DephasingParams<T>, t: T) -> Complex<T> {
    let beta = params.g0 / params.omega;
    let rot = c(T::zero(), params.omega * t).exp();
    (c(T::one(), T::zero()) - rot) * c(beta, T::zero())
}

/// Unit-modulus phase `A(t) = exp((alpha z* - alpha* z)/2)`.
pub fn phase_a<T: Scalar>(params: &DephasingParams<T>, t: T) -> Complex<T> {
    let a = alpha(params, t);
    let half = c(T::from_f64_lossy(0.5), T::zero());
    ((a * params.z.conj() - a.conj() * params.z) * half).exp()
}

/// Normalization of the field superposition `(1-lambda)|0> + lambda|z>`.
pub fn normalization_c<T: Scalar>(lambda: T, z: Complex<T>) -> T {
    let one = T::one();
    let two = T::from_f64_lossy(2.0);
    let re_overlap = coherent_overlap(c(T::zero(), T::zero()), z).re;
    ((one - lambda) * (one - lambda)
        + lambda * lambda
        + two * lambda * (one - lambda) * re_overlap)
        .sqrt()
}

/// Per-spec constants of the closed form: each `sigma_z` branch of the total
/// state is a fixed superposition of the vacuum and the coherent state.
#[derive(Debug, Clone, Copy)]
pub struct SpecCoefficients<T: Scalar> {
    /// Excited branch on |0> and |z>.
    p0: Complex<T>,
    pz: Complex<T>,
    /// Ground branch on |0> and |z>.
    q0: Complex<T>,
    qz: Complex<T>,
    pub(crate) population_e: T,
}

/// Sample-independent part of the coherence factor at one time: the four
/// branch-field overlaps with their displacement phases, plus the free
/// two-level phase.
#[derive(Debug, Clone, Copy)]
pub struct CoherenceKernel<T: Scalar> {
    free_phase: Complex<T>,
    overlaps: [[Complex<T>; 2]; 2],
}

pub(crate) fn coherence_from_kernel<T: Scalar>(
    coeffs: &SpecCoefficients<T>,
    kernel: &CoherenceKernel<T>,
) -> Complex<T> {
    let bra = [coeffs.q0, coeffs.qz];
    let ket = [coeffs.p0, coeffs.pz];
    let mut sum = Complex::new(T::zero(), T::zero());
    for (x, qb) in bra.iter().enumerate() {
        for (y, pk) in ket.iter().enumerate() {
            sum += qb.conj() * *pk * kernel.overlaps[x][y];
        }
    }
    kernel.free_phase * sum
}

/// Reduced state from precomputed spec coefficients and a time kernel.
pub(crate) fn reduced_from_kernel<T: Scalar>(
    coeffs: &SpecCoefficients<T>,
    kernel: &CoherenceKernel<T>,
) -> Result<DensityMatrix<T>> {
    reduced_from_parts(coeffs.population_e, coherence_from_kernel(coeffs, kernel))
}

/// Closed-form reduced dynamics.
#[derive(Debug, Clone)]
pub struct DephasingModel<T: Scalar> {
    params: DephasingParams<T>,
}

impl<T: Scalar> DephasingModel<T> {
    pub fn new(params: DephasingParams<T>) -> Self {
        Self { params }
    }

    pub fn params(&self) -> &DephasingParams<T> {
        &self.params
    }

    pub(crate) fn spec_coefficients(&self, spec: &CorrelatedStateSpec<T>) -> SpecCoefficients<T> {
        let cl = normalization_c(spec.lambda, self.params.z);
        let w0 = c((T::one() - spec.lambda) / cl, T::zero());
        let wz = c(spec.lambda / cl, T::zero());
        let u = &spec.unitary;
        let c1 = spec.b1 * u[(0, 0)];
        let c2 = spec.b2 * u[(0, 1)];
        let d1 = spec.b1 * u[(1, 0)];
        let d2 = spec.b2 * u[(1, 1)];
        let p0 = c1 + c2 * w0;
        let pz = c2 * wz;
        let q0 = d1 + d2 * w0;
        let qz = d2 * wz;
        let ov = coherent_overlap(c(T::zero(), T::zero()), self.params.z);
        let two = T::from_f64_lossy(2.0);
        let population_e = p0.norm_sqr() + pz.norm_sqr() + two * (p0.conj() * pz * ov).re;
        SpecCoefficients {
            p0,
            pz,
            q0,
            qz,
            population_e,
        }
    }

    pub(crate) fn kernel(&self, t: T) -> CoherenceKernel<T> {
        let p = &self.params;
        let beta = p.g0 / p.omega;
        let rot = c(T::zero(), p.omega * t).exp();
        let rot_conj = rot.conj();
        let a_conj = alpha(p, t).conj();
        let labels = [c(T::zero(), T::zero()), p.z];
        let mut overlaps = [[Complex::new(T::zero(), T::zero()); 2]; 2];
        let wm1 = rot - c(T::one(), T::zero());
        for (xi, &x) in labels.iter().enumerate() {
            for (yi, &y) in labels.iter().enumerate() {
                // Accumulated displacement phases of the two branches.
                let theta = -beta * ((x + y).conj() * wm1).im;
                let phase = c(T::zero(), theta).exp();
                let bra = x * rot_conj + a_conj;
                let ket = y * rot_conj - a_conj;
                overlaps[xi][yi] = phase * coherent_overlap(bra, ket);
            }
        }
        let two = T::from_f64_lossy(2.0);
        let free_phase = c(T::zero(), -two * p.epsilon * t).exp();
        CoherenceKernel {
            free_phase,
            overlaps,
        }
    }

    /// Off-diagonal `<e|rho_S(t)|g>` of the reduced state.
    pub fn coherence_factor(&self, spec: &CorrelatedStateSpec<T>, t: T) -> Complex<T> {
        coherence_from_kernel(&self.spec_coefficients(spec), &self.kernel(t))
    }

    /// Excited-state population; time-independent under pure dephasing.
    pub fn population_e(&self, spec: &CorrelatedStateSpec<T>) -> T {
        self.spec_coefficients(spec).population_e
    }

    /// The 2x2 reduced state at time `t`.
    pub fn reduced_state(&self, spec: &CorrelatedStateSpec<T>, t: T) -> Result<DensityMatrix<T>> {
        let coeffs = self.spec_coefficients(spec);
        let b = coherence_from_kernel(&coeffs, &self.kernel(t));
        reduced_from_parts(coeffs.population_e, b)
    }
}

/// Assemble and validate a qubit state from its population and coherence.
pub(crate) fn reduced_from_parts<T: Scalar>(
    population_e: T,
    coherence: Complex<T>,
) -> Result<DensityMatrix<T>> {
    let mut m = Array2::zeros((2, 2));
    m[(0, 0)] = c(population_e, T::zero());
    m[(0, 1)] = coherence;
    m[(1, 0)] = coherence.conj();
    m[(1, 1)] = c(T::one() - population_e, T::zero());
    DensityMatrix::new(m).map_err(|e| match e {
        Error::NotPositiveSemidefinite { eigenvalue } => Error::Inconsistent(format!(
            "reduced state left the Bloch ball: eigenvalue {eigenvalue:.3e}"
        )),
        other => other,
    })
}

/// Truncation of the bosonic mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockCutoff {
    pub n_max: usize,
}

impl FockCutoff {
    pub fn new(n_max: usize) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::OutOfRange {
                what: "n_max",
                value: 0.0,
                min: 1.0,
                max: f64::INFINITY,
            });
        }
        Ok(Self { n_max })
    }
}

impl Default for FockCutoff {
    /// Generous for |z| <= 1 and |alpha| <= 0.2; the oracle's doubling check
    /// makes it rigorous.
    fn default() -> Self {
        Self { n_max: 40 }
    }
}

/// Number-basis amplitudes of a coherent state, truncated at `n_max`.
pub fn coherent_amplitudes<T: Scalar>(y: Complex<T>, n_max: usize) -> Array1<Complex<T>> {
    let mut amps = Array1::zeros(n_max + 1);
    let half = T::from_f64_lossy(0.5);
    amps[0] = c((-half * y.norm_sqr()).exp(), T::zero());
    for n in 1..=n_max {
        let root = T::from_usize(n).expect("n fits scalar").sqrt();
        amps[n] = amps[n - 1] * y / c(root, T::zero());
    }
    amps
}

fn check_tail<T: Scalar>(y: Complex<T>, n_max: usize) -> Result<()> {
    let amps = coherent_amplitudes(y, n_max);
    let norm_sq: T = amps.iter().map(|a| a.norm_sqr()).sum();
    if norm_sq < T::one() - tol::structure::<T>() {
        return Err(Error::CutoffInsufficient {
            n_max,
            detail: format!(
                "truncated coherent-state norm^2 = {}",
                norm_sq.to_f64().unwrap_or(f64::NAN)
            ),
        });
    }
    Ok(())
}

/// The total initial state in the truncated number basis, dimension
/// `2 (n_max + 1)` with the system index slowest.
pub fn total_state_fock<T: Scalar>(
    params: &DephasingParams<T>,
    spec: &CorrelatedStateSpec<T>,
    cutoff: FockCutoff,
) -> Result<StateVector<T>> {
    check_tail(params.z, cutoff.n_max)?;
    let model = DephasingModel::new(*params);
    let coeffs = model.spec_coefficients(spec);
    let vac = coherent_amplitudes(c(T::zero(), T::zero()), cutoff.n_max);
    let coh = coherent_amplitudes(params.z, cutoff.n_max);
    let dim_e = cutoff.n_max + 1;
    let mut amps = Array1::zeros(2 * dim_e);
    for k in 0..dim_e {
        amps[k] = coeffs.p0 * vac[k] + coeffs.pz * coh[k];
        amps[dim_e + k] = coeffs.q0 * vac[k] + coeffs.qz * coh[k];
    }
    StateVector::new(amps)
}

/// Total Hamiltonian in the truncated number basis.
pub fn hamiltonian_fock<T: Scalar>(
    params: &DephasingParams<T>,
    cutoff: FockCutoff,
) -> HermitianOperator<T> {
    let dim_e = cutoff.n_max + 1;
    let dim = 2 * dim_e;
    let mut m = Array2::zeros((dim, dim));
    for (s, sign) in [(0usize, T::one()), (1usize, -T::one())] {
        let base = s * dim_e;
        for n in 0..dim_e {
            let n_t = T::from_usize(n).expect("n fits scalar");
            m[(base + n, base + n)] = c(sign * params.epsilon + params.omega * n_t, T::zero());
            if n + 1 < dim_e {
                let root = T::from_usize(n + 1).expect("n fits scalar").sqrt();
                let coupling = c(sign * params.g0 * root, T::zero());
                m[(base + n, base + n + 1)] = coupling;
                m[(base + n + 1, base + n)] = coupling;
            }
        }
    }
    HermitianOperator::new(m).expect("construction is Hermitian")
}

/// Brute-force reduced dynamics in truncated Fock space. Holds the
/// eigendecompositions for the requested cutoff and for twice that cutoff;
/// every reduced state is convergence-checked against the doubled basis.
pub struct FockOracle<T: Scalar> {
    params: DephasingParams<T>,
    cutoff: FockCutoff,
    base: Propagator<T>,
    doubled: Propagator<T>,
}

impl<T: Scalar> FockOracle<T> {
    pub fn new(params: DephasingParams<T>, cutoff: FockCutoff) -> Result<Self> {
        check_tail(params.z, cutoff.n_max)?;
        let base = Propagator::new(&hamiltonian_fock(&params, cutoff))?;
        let doubled = Propagator::new(&hamiltonian_fock(
            &params,
            FockCutoff {
                n_max: 2 * cutoff.n_max,
            },
        ))?;
        Ok(Self {
            params,
            cutoff,
            base,
            doubled,
        })
    }

    pub fn cutoff(&self) -> FockCutoff {
        self.cutoff
    }

    fn reduced_at_cutoff(
        &self,
        propagator: &Propagator<T>,
        n_max: usize,
        spec: &CorrelatedStateSpec<T>,
        t: T,
    ) -> Result<DensityMatrix<T>> {
        let psi0 = total_state_fock(&self.params, spec, FockCutoff { n_max })?;
        let psi_t = propagator.evolve(&psi0, t)?;
        psi_t.partial_trace(Bipartition::new(2, n_max + 1), Keep::System)
    }

    /// Reduced state at time `t`, checked to be converged in the cutoff.
    pub fn reduced(&self, spec: &CorrelatedStateSpec<T>, t: T) -> Result<DensityMatrix<T>> {
        let rho = self.reduced_at_cutoff(&self.base, self.cutoff.n_max, spec, t)?;
        let rho2 = self.reduced_at_cutoff(&self.doubled, 2 * self.cutoff.n_max, spec, t)?;
        let change = trace_distance(&rho, &rho2)?;
        if change >= tol::psd::<T>() {
            return Err(Error::TruncationNotConverged {
                n_max: self.cutoff.n_max,
                change: change.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(rho)
    }
}

/// One-shot oracle evaluation. Rebuilds the eigendecompositions on every
/// call; use [`FockOracle`] directly when sweeping many specs or times.
pub fn oracle_reduced_state<T: Scalar>(
    params: &DephasingParams<T>,
    spec: &CorrelatedStateSpec<T>,
    t: T,
    cutoff: FockCutoff,
) -> Result<DensityMatrix<T>> {
    FockOracle::new(*params, cutoff)?.reduced(spec, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::purity;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn equal_weights() -> (Complex<f64>, Complex<f64>) {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        (c(r, 0.0), c(r, 0.0))
    }

    fn original_spec(lambda: f64) -> CorrelatedStateSpec<f64> {
        let (b1, b2) = equal_weights();
        family_spec::<f64, ChaCha8Rng>(StateFamily::Original, b1, b2, lambda, None).unwrap()
    }

    fn random_spec(rng: &mut ChaCha8Rng, lambda: f64) -> CorrelatedStateSpec<f64> {
        let (b1, b2) = crate::experiments::random_amplitudes::<f64, _>(rng);
        family_spec(StateFamily::HaarRandom, b1, b2, lambda, Some(rng)).unwrap()
    }

    #[test]
    fn coherent_overlap_examples() {
        let zero = c(0.0, 0.0);
        assert!((coherent_overlap(zero, zero) - c(1.0, 0.0)).norm() < 1e-15);
        let x = c(0.7, -0.3);
        assert!((coherent_overlap(x, x) - c(1.0, 0.0)).norm() < 1e-14);

        // |<0|z=1>| against the truncated-Fock inner product at cutoff 40.
        let z = c(1.0, 0.0);
        let v0 = coherent_amplitudes(zero, 40);
        let vz = coherent_amplitudes(z, 40);
        let fock: Complex<f64> = v0
            .iter()
            .zip(vz.iter())
            .map(|(a, b)| a.conj() * b)
            .sum();
        let formula = coherent_overlap(zero, z);
        assert!((formula - fock).norm() < 1e-12);
        assert!((formula.norm() - (-0.5f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn overlap_modulus_never_exceeds_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let x = c(rng.gen::<f64>() * 4.0 - 2.0, rng.gen::<f64>() * 4.0 - 2.0);
            let y = c(rng.gen::<f64>() * 4.0 - 2.0, rng.gen::<f64>() * 4.0 - 2.0);
            assert!(coherent_overlap(x, y).norm() <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn alpha_examples() {
        let params = DephasingParams::<f64>::default();
        assert!(alpha(&params, 0.0).norm() < 1e-15);
        assert!(alpha(&params, 2.0 * std::f64::consts::PI).norm() < 1e-12);
        let a = alpha(&params, std::f64::consts::PI);
        assert!((a - c(0.2, 0.0)).norm() < 1e-12);
        // |alpha| <= 2 g0 / omega on a dense grid.
        for i in 0..200 {
            let t = i as f64 * 0.05;
            assert!(alpha(&params, t).norm() <= 0.2 + 1e-12);
        }
    }

    #[test]
    fn phase_a_examples() {
        let params = DephasingParams::<f64>::default();
        assert!((phase_a(&params, 0.0) - c(1.0, 0.0)).norm() < 1e-15);
        // z real and alpha real (t = pi) leave no phase.
        assert!((phase_a(&params, std::f64::consts::PI) - c(1.0, 0.0)).norm() < 1e-12);
        for i in 0..100 {
            let t = i as f64 * 0.07;
            assert!((phase_a(&params, t).norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn normalization_c_examples() {
        let z = c(1.0f64, 0.0);
        assert!((normalization_c(0.0, z) - 1.0).abs() < 1e-15);
        assert!((normalization_c(1.0, z) - 1.0).abs() < 1e-15);
        let expected = (0.5 + 0.5 * (-0.5f64).exp()).sqrt();
        assert!((normalization_c(0.5, z) - expected).abs() < 1e-14);
        assert!((expected - 0.8962).abs() < 1e-4);
    }

    #[test]
    fn coherence_at_zero_time_for_uncorrelated_equal_weights() {
        let model = DephasingModel::new(DephasingParams::default());
        let spec = original_spec(0.0);
        let b = model.coherence_factor(&spec, 0.0);
        assert!((b - c(0.5, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn population_examples() {
        let model = DephasingModel::new(DephasingParams::default());
        // Identity unitary: only the first branch contributes.
        let spec = CorrelatedStateSpec::new(
            c(0.6f64, 0.0),
            c(0.0, 0.8),
            0.7,
            linalg::identity(2),
        )
        .unwrap();
        assert!((model.population_e(&spec) - 0.36).abs() < 1e-12);
        assert!((model.population_e(&original_spec(0.0)) - 0.5).abs() < 1e-14);
    }

    #[test]
    fn reduced_state_at_zero_time_is_plus_state_for_uncorrelated_equal_weights() {
        let model = DephasingModel::new(DephasingParams::default());
        let rho = model.reduced_state(&original_spec(0.0), 0.0).unwrap();
        assert!((purity(&rho) - 1.0).abs() < 1e-12);
        assert!((rho.entries()[(0, 1)] - c(0.5, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn reduced_state_is_periodic() {
        let model = DephasingModel::new(DephasingParams::default());
        let period = 2.0 * std::f64::consts::PI;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let lambda = rng.gen();
            let spec = random_spec(&mut rng, lambda);
            for i in 0..5 {
                let t = i as f64 * 0.9;
                let a = model.reduced_state(&spec, t).unwrap();
                let b = model.reduced_state(&spec, t + period).unwrap();
                assert!(trace_distance(&a, &b).unwrap() < 1e-10);
            }
        }
    }

    #[test]
    fn coherence_stays_inside_bloch_ball() {
        let model = DephasingModel::new(DephasingParams::default());
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..50 {
            let lambda = rng.gen();
            let spec = random_spec(&mut rng, lambda);
            let pe = model.population_e(&spec);
            assert!((0.0..=1.0).contains(&pe));
            for i in 0..10 {
                let t = i as f64 * 0.63;
                let b = model.coherence_factor(&spec, t);
                assert!(b.norm() <= (pe * (1.0 - pe)).sqrt() + 1e-10);
                assert!(b.norm() <= 0.5 + 1e-10);
            }
        }
    }

    #[test]
    fn family_spec_original_keeps_amplitudes() {
        let spec = original_spec(0.3);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((spec.b1() - c(r, 0.0)).norm() < 1e-15);
        assert!((spec.b2() - c(r, 0.0)).norm() < 1e-15);
        assert!(linalg::max_abs_diff(spec.unitary(), &linalg::identity(2)) < 1e-15);
    }

    #[test]
    fn family_spec_swapped_swaps_field_states() {
        let params = DephasingParams::<f64>::default();
        let b1 = c(0.6, 0.0);
        let b2 = c(0.0, 0.8);
        let lambda = 0.4;
        let spec =
            family_spec::<f64, ChaCha8Rng>(StateFamily::Swapped, b1, b2, lambda, None).unwrap();
        let cutoff = FockCutoff::default();
        let got = total_state_fock(&params, &spec, cutoff).unwrap();

        // b1 |e> x |Omega> + b2 |g> x |0>, built directly.
        let cl = normalization_c(lambda, params.z);
        let vac = coherent_amplitudes(c(0.0, 0.0), cutoff.n_max);
        let coh = coherent_amplitudes(params.z, cutoff.n_max);
        let dim_e = cutoff.n_max + 1;
        let mut amps = Array1::zeros(2 * dim_e);
        for k in 0..dim_e {
            let omega_k = (vac[k] * c((1.0 - lambda) / cl, 0.0)) + coh[k] * c(lambda / cl, 0.0);
            amps[k] = b1 * omega_k;
            amps[dim_e + k] = b2 * vac[k];
        }
        let expected = StateVector::new(amps).unwrap();
        let d: f64 = got
            .amplitudes()
            .iter()
            .zip(expected.amplitudes().iter())
            .map(|(a, b)| (*a - *b).norm())
            .fold(0.0, f64::max);
        assert!(d < 1e-12);
    }

    #[test]
    fn family_spec_sigmax_has_no_initial_coherence_at_equal_weights() {
        let model = DephasingModel::new(DephasingParams::default());
        let (b1, b2) = equal_weights();
        for lambda in [0.0, 0.2, 0.5, 0.9, 1.0] {
            let spec =
                family_spec::<f64, ChaCha8Rng>(StateFamily::SigmaX, b1, b2, lambda, None).unwrap();
            assert!(
                model.coherence_factor(&spec, 0.0).norm() < 1e-12,
                "lambda = {lambda}"
            );
        }
    }

    #[test]
    fn family_spec_haar_requires_rng() {
        let (b1, b2) = equal_weights();
        let out = family_spec::<f64, ChaCha8Rng>(StateFamily::HaarRandom, b1, b2, 0.5, None);
        assert!(matches!(out, Err(Error::RngRequired)));
    }

    #[test]
    fn total_state_fock_for_bare_excited_state() {
        let params = DephasingParams::<f64>::default();
        let spec =
            CorrelatedStateSpec::new(c(1.0, 0.0), c(0.0, 0.0), 0.0, linalg::identity(2)).unwrap();
        let psi = total_state_fock(&params, &spec, FockCutoff::default()).unwrap();
        assert!((psi.amplitudes()[0] - c(1.0, 0.0)).norm() < 1e-14);
        let rest: f64 = psi.amplitudes().iter().skip(1).map(|a| a.norm_sqr()).sum();
        assert!(rest < 1e-24);
    }

    #[test]
    fn total_state_fock_environment_marginal_is_vacuum_at_lambda_zero() {
        let params = DephasingParams::<f64>::default();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let spec = random_spec(&mut rng, 0.0);
        let cutoff = FockCutoff::default();
        let psi = total_state_fock(&params, &spec, cutoff).unwrap();
        let rho_e = psi
            .partial_trace(Bipartition::new(2, cutoff.n_max + 1), Keep::Environment)
            .unwrap();
        assert!((rho_e.entries()[(0, 0)].re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn total_state_fock_norm_at_default_cutoff() {
        let params = DephasingParams::<f64>::default();
        let psi = total_state_fock(&params, &original_spec(0.6), FockCutoff::default()).unwrap();
        let n: f64 = psi.amplitudes().iter().map(|a| a.norm_sqr()).sum();
        assert!((n - 1.0).abs() < 1e-10);
    }

    #[test]
    fn cutoff_too_small_is_reported() {
        let params = DephasingParams {
            z: c(6.0, 0.0),
            ..DephasingParams::<f64>::default()
        };
        let out = total_state_fock(&params, &original_spec(0.5), FockCutoff::new(3).unwrap());
        assert!(matches!(out, Err(Error::CutoffInsufficient { .. })));
    }

    #[test]
    fn oracle_matches_initial_marginal_at_time_zero() {
        let params = DephasingParams::<f64>::default();
        let cutoff = FockCutoff::new(24).unwrap();
        let oracle = FockOracle::new(params, cutoff).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..5 {
            let lambda = rng.gen();
            let spec = random_spec(&mut rng, lambda);
            let direct = total_state_fock(&params, &spec, cutoff)
                .unwrap()
                .partial_trace(Bipartition::new(2, cutoff.n_max + 1), Keep::System)
                .unwrap();
            let via_oracle = oracle.reduced(&spec, 0.0).unwrap();
            assert!(trace_distance(&direct, &via_oracle).unwrap() < 1e-12);
        }
    }

    #[test]
    fn oracle_populations_are_time_independent() {
        let params = DephasingParams::<f64>::default();
        let oracle = FockOracle::new(params, FockCutoff::new(24).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let spec = random_spec(&mut rng, 0.7);
        let p0 = oracle.reduced(&spec, 0.0).unwrap().entries()[(0, 0)].re;
        for i in 1..=10 {
            let t = rng.gen::<f64>() * 2.0 * std::f64::consts::PI;
            let p = oracle.reduced(&spec, t).unwrap().entries()[(0, 0)].re;
            assert!((p - p0).abs() < 1e-8, "drift at sample {i}");
        }
    }

    #[test]
    fn closed_form_matches_oracle_across_specs_and_times() {
        let params = DephasingParams::<f64>::default();
        let model = DephasingModel::new(params);
        let oracle = FockOracle::new(params, FockCutoff::new(32).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mut worst: f64 = 0.0;
        for s in 0..12 {
            let lambda = (s % 6) as f64 / 5.0;
            let spec = random_spec(&mut rng, lambda);
            for i in 0..12 {
                let t = i as f64 * 0.55;
                let a = model.reduced_state(&spec, t).unwrap();
                let b = oracle.reduced(&spec, t).unwrap();
                worst = worst.max(trace_distance(&a, &b).unwrap());
            }
        }
        assert!(worst < 1e-10, "max deviation {worst:.3e}");
    }

    #[test]
    fn population_matches_oracle() {
        let params = DephasingParams::<f64>::default();
        let model = DephasingModel::new(params);
        let oracle = FockOracle::new(params, FockCutoff::new(24).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let spec = random_spec(&mut rng, 0.45);
        let pe = model.population_e(&spec);
        for i in 0..10 {
            let t = i as f64 * 0.7;
            let p = oracle.reduced(&spec, t).unwrap().entries()[(0, 0)].re;
            assert!((p - pe).abs() < 1e-8);
        }
    }

    #[test]
    fn spec_validation_errors() {
        assert!(matches!(
            CorrelatedStateSpec::new(c(1.0, 0.0), c(0.5, 0.0), 0.5, linalg::identity(2)),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            CorrelatedStateSpec::new(c(1.0, 0.0), c(0.0, 0.0), 1.5, linalg::identity(2)),
            Err(Error::OutOfRange { .. })
        ));
        let mut not_unitary = linalg::identity(2);
        not_unitary[(0, 0)] = c(0.5, 0.0);
        assert!(matches!(
            CorrelatedStateSpec::new(c(1.0, 0.0), c(0.0, 0.0), 0.5, not_unitary),
            Err(Error::NotUnitary { .. })
        ));
    }
}
