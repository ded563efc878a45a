//! Domain types and primitive operations for small Hilbert spaces: state
//! vectors, density matrices, Hermitian operators, partial traces, fidelity,
//! entropy, purity, pure-state concurrence and unitary time evolution.
//!
//! Every `DensityMatrix` is validated on construction: Hermitian and unit
//! trace within 1e-12, all eigenvalues at least -1e-10 (f64 scale; other
//! scalars are rescaled by machine epsilon). Eigenvalues in the tiny negative
//! band are clamped to zero before matrix functions.

use ndarray::{Array1, Array2};
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{self, HermitianEigen};
use crate::scalar::{c, tol, Scalar};

/// Which marginal a partial trace keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Keep {
    System,
    Environment,
}

/// Splitting of a Hilbert space into system x environment factors, with the
/// system index running slowest: composite index `i = i_sys * dim_environment
/// + i_env`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bipartition {
    pub dim_system: usize,
    pub dim_environment: usize,
}

impl Bipartition {
    pub fn new(dim_system: usize, dim_environment: usize) -> Self {
        Self {
            dim_system,
            dim_environment,
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dim_system * self.dim_environment
    }

    fn check_total(&self, dim: usize) -> Result<()> {
        if self.total_dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: self.total_dim(),
                got: dim,
            });
        }
        Ok(())
    }
}

/// Normalized pure state.
#[derive(Debug, Clone)]
pub struct StateVector<T: Scalar> {
    amplitudes: Array1<Complex<T>>,
}

impl<T: Scalar> StateVector<T> {
    /// Validates normalization within tolerance, then rescales to exact unit
    /// norm so downstream marginals have exact unit trace.
    pub fn new(amplitudes: Array1<Complex<T>>) -> Result<Self> {
        let norm_sq: T = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        let deviation = (norm_sq - T::one()).abs();
        if deviation > tol::structure::<T>() {
            return Err(Error::NotNormalized {
                deviation: deviation.to_f64().unwrap_or(f64::NAN),
            });
        }
        let scale = Complex::new(T::one() / norm_sq.sqrt(), T::zero());
        Ok(Self {
            amplitudes: amplitudes.mapv(|a| a * scale),
        })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &Array1<Complex<T>> {
        &self.amplitudes
    }

    /// `<self|other>`.
    pub fn overlap(&self, other: &Self) -> Result<Complex<T>> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Projector `|self><self|` as a density matrix.
    pub fn projector(&self) -> DensityMatrix<T> {
        DensityMatrix {
            entries: linalg::outer(&self.amplitudes, &self.amplitudes),
        }
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let n = self.dim();
        let m = other.dim();
        let amplitudes =
            Array1::from_shape_fn(n * m, |k| self.amplitudes[k / m] * other.amplitudes[k % m]);
        Self { amplitudes }
    }

    /// Marginal of the pure state on one factor of `part`.
    pub fn partial_trace(&self, part: Bipartition, keep: Keep) -> Result<DensityMatrix<T>> {
        part.check_total(self.dim())?;
        let (ds, de) = (part.dim_system, part.dim_environment);
        let amp = &self.amplitudes;
        let entries = match keep {
            Keep::System => Array2::from_shape_fn((ds, ds), |(i, j)| {
                (0..de)
                    .map(|e| amp[i * de + e] * amp[j * de + e].conj())
                    .sum()
            }),
            Keep::Environment => Array2::from_shape_fn((de, de), |(a, b)| {
                (0..ds)
                    .map(|s| amp[s * de + a] * amp[s * de + b].conj())
                    .sum()
            }),
        };
        // Exactly PSD and unit-trace by construction (the vector is
        // normalized in `new`), so skip the eigenvalue check.
        Ok(DensityMatrix { entries })
    }
}

/// Hermitian, positive-semidefinite, unit-trace matrix.
#[derive(Debug, Clone)]
pub struct DensityMatrix<T: Scalar> {
    entries: Array2<Complex<T>>,
}

impl<T: Scalar> DensityMatrix<T> {
    pub fn new(entries: Array2<Complex<T>>) -> Result<Self> {
        let dev = linalg::hermiticity_deviation(&entries);
        if dev > tol::structure::<T>() {
            return Err(Error::NotHermitian {
                deviation: dev.to_f64().unwrap_or(f64::NAN),
                tolerance: tol::structure::<T>().to_f64().unwrap_or(f64::NAN),
            });
        }
        let trace: Complex<T> = entries.diag().iter().copied().sum();
        let trace_dev = (trace - Complex::new(T::one(), T::zero())).norm();
        if trace_dev > tol::structure::<T>() {
            return Err(Error::NonUnitTrace {
                deviation: trace_dev.to_f64().unwrap_or(f64::NAN),
            });
        }
        let min = min_eigenvalue(&entries)?;
        if min < -tol::psd::<T>() {
            return Err(Error::NotPositiveSemidefinite {
                eigenvalue: min.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &Array2<Complex<T>> {
        &self.entries
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        let w = T::one() / T::from_usize(dim).expect("dim fits scalar");
        Self {
            entries: Array2::from_diag_elem(dim, Complex::new(w, T::zero())),
        }
    }

    /// Eigendecomposition (descending eigenvalues).
    pub fn eig(&self) -> Result<HermitianEigen<T>> {
        linalg::hermitian_eigen(&self.entries)
    }

    pub fn eigenvalues(&self) -> Result<Array1<T>> {
        linalg::hermitian_eigenvalues(&self.entries)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self {
            entries: ndarray::linalg::kron(&self.entries, &other.entries),
        }
    }

    pub fn partial_trace(&self, part: Bipartition, keep: Keep) -> Result<DensityMatrix<T>> {
        part.check_total(self.dim())?;
        let (ds, de) = (part.dim_system, part.dim_environment);
        let m = &self.entries;
        let entries = match keep {
            Keep::System => Array2::from_shape_fn((ds, ds), |(i, j)| {
                (0..de).map(|e| m[(i * de + e, j * de + e)]).sum()
            }),
            Keep::Environment => Array2::from_shape_fn((de, de), |(a, b)| {
                (0..ds).map(|s| m[(s * de + a, s * de + b)]).sum()
            }),
        };
        DensityMatrix::new(entries)
    }
}

/// Hermitian operator (Hamiltonian, observable).
#[derive(Debug, Clone)]
pub struct HermitianOperator<T: Scalar> {
    entries: Array2<Complex<T>>,
}

impl<T: Scalar> HermitianOperator<T> {
    pub fn new(entries: Array2<Complex<T>>) -> Result<Self> {
        let dev = linalg::hermiticity_deviation(&entries);
        if dev > tol::structure::<T>() {
            return Err(Error::NotHermitian {
                deviation: dev.to_f64().unwrap_or(f64::NAN),
                tolerance: tol::structure::<T>().to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &Array2<Complex<T>> {
        &self.entries
    }

    pub fn eig(&self) -> Result<HermitianEigen<T>> {
        linalg::hermitian_eigen(&self.entries)
    }

    /// `<psi|H|psi>`.
    pub fn expectation(&self, psi: &StateVector<T>) -> Result<T> {
        if psi.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: psi.dim(),
            });
        }
        let hpsi = self.entries.dot(psi.amplitudes());
        let val: Complex<T> = psi
            .amplitudes()
            .iter()
            .zip(hpsi.iter())
            .map(|(a, b)| a.conj() * b)
            .sum();
        Ok(val.re)
    }
}

pub fn pauli_x<T: Scalar>() -> HermitianOperator<T> {
    let mut m = Array2::zeros((2, 2));
    m[(0, 1)] = c(T::one(), T::zero());
    m[(1, 0)] = c(T::one(), T::zero());
    HermitianOperator { entries: m }
}

pub fn pauli_y<T: Scalar>() -> HermitianOperator<T> {
    let mut m = Array2::zeros((2, 2));
    m[(0, 1)] = c(T::zero(), -T::one());
    m[(1, 0)] = c(T::zero(), T::one());
    HermitianOperator { entries: m }
}

pub fn pauli_z<T: Scalar>() -> HermitianOperator<T> {
    let mut m = Array2::zeros((2, 2));
    m[(0, 0)] = c(T::one(), T::zero());
    m[(1, 1)] = c(-T::one(), T::zero());
    HermitianOperator { entries: m }
}

/// Smallest eigenvalue; analytic for 2x2, Jacobi otherwise.
fn min_eigenvalue<T: Scalar>(m: &Array2<Complex<T>>) -> Result<T> {
    let n = m.nrows();
    match n {
        0 => Ok(T::zero()),
        1 => Ok(m[(0, 0)].re),
        2 => {
            let half = T::from_f64_lossy(0.5);
            let a = m[(0, 0)].re;
            let d = m[(1, 1)].re;
            let b = m[(0, 1)];
            let mid = (a + d) * half;
            let rad = ((a - d) * half).hypot(b.norm());
            Ok(mid - rad)
        }
        _ => {
            let w = linalg::hermitian_eigenvalues(m)?;
            Ok(w[n - 1])
        }
    }
}

/// Eigendecomposition of a Hermitian matrix with an explicit Hermiticity
/// pre-check. `A = V diag(w) V†`, eigenvalues descending.
pub fn hermitian_eigs<T: Scalar>(matrix: &Array2<Complex<T>>) -> Result<HermitianEigen<T>> {
    let dev = linalg::hermiticity_deviation(matrix);
    if dev > tol::structure::<T>() {
        return Err(Error::NotHermitian {
            deviation: dev.to_f64().unwrap_or(f64::NAN),
            tolerance: tol::structure::<T>().to_f64().unwrap_or(f64::NAN),
        });
    }
    linalg::hermitian_eigen(matrix)
}

/// Positive-semidefinite square root of a density matrix. Eigenvalues in
/// `[-1e-10, 0)` are clamped to zero; anything more negative is an error.
pub fn psd_sqrt<T: Scalar>(rho: &DensityMatrix<T>) -> Result<Array2<Complex<T>>> {
    let eig = rho.eig()?;
    let mut sqrt_values = eig.values.clone();
    for w in sqrt_values.iter_mut() {
        if *w < -tol::psd::<T>() {
            return Err(Error::NotPositiveSemidefinite {
                eigenvalue: w.to_f64().unwrap_or(f64::NAN),
            });
        }
        *w = w.max(T::zero()).sqrt();
    }
    Ok(linalg::from_eigen(&sqrt_values, &eig.vectors))
}

/// Entropy of a spectrum in the given logarithm base, with 0 log 0 = 0.
pub(crate) fn entropy_of_spectrum<T: Scalar>(values: &Array1<T>, log_base: T) -> T {
    let ln_base = log_base.ln();
    let mut s = T::zero();
    for &w in values.iter() {
        if w > T::zero() {
            s -= w * w.ln();
        }
    }
    s / ln_base
}

/// Von Neumann entropy `-Tr rho log rho` in the given base (e for nats,
/// 2 for bits).
pub fn von_neumann_entropy<T: Scalar>(rho: &DensityMatrix<T>, log_base: T) -> Result<T> {
    let values = rho.eigenvalues()?;
    Ok(entropy_of_spectrum(&values, log_base))
}

/// Purity `Tr rho^2`; for Hermitian input this is the squared Frobenius norm.
pub fn purity<T: Scalar>(rho: &DensityMatrix<T>) -> T {
    rho.entries().iter().map(|x| x.norm_sqr()).sum()
}

/// Uhlmann fidelity, computed as the squared trace norm of
/// `sqrt(rho2) sqrt(rho1)`; equivalent to the nested-square-root form and
/// numerically stabler.
pub fn fidelity<T: Scalar>(rho1: &DensityMatrix<T>, rho2: &DensityMatrix<T>) -> Result<T> {
    if rho1.dim() != rho2.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho1.dim(),
            got: rho2.dim(),
        });
    }
    let s1 = psd_sqrt(rho1)?;
    let s2 = psd_sqrt(rho2)?;
    let m = s2.dot(&s1);
    let gram = linalg::adjoint(&m).dot(&m);
    let w = linalg::hermitian_eigenvalues(&gram)?;
    let trace_norm: T = w.iter().map(|&x| x.max(T::zero()).sqrt()).sum();
    Ok((trace_norm * trace_norm).min(T::one()))
}

/// Concurrence of a pure bipartite state with a two-dimensional system
/// factor: `sqrt(2 (1 - purity of the system marginal))`.
pub fn concurrence_pure<T: Scalar>(psi: &StateVector<T>, part: Bipartition) -> Result<T> {
    if part.dim_system != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: part.dim_system,
        });
    }
    let rho_s = psi.partial_trace(part, Keep::System)?;
    let p = purity(&rho_s);
    let two = T::from_f64_lossy(2.0);
    Ok((two * (T::one() - p)).max(T::zero()).sqrt())
}

/// Cached eigendecomposition of a Hamiltonian, for repeated evolution at
/// many times.
#[derive(Debug, Clone)]
pub struct Propagator<T: Scalar> {
    eig: HermitianEigen<T>,
}

impl<T: Scalar> Propagator<T> {
    pub fn new(hamiltonian: &HermitianOperator<T>) -> Result<Self> {
        Ok(Self {
            eig: hamiltonian.eig()?,
        })
    }

    pub fn dim(&self) -> usize {
        self.eig.values.len()
    }

    /// Rotate a state into the Hamiltonian eigenbasis (`V† psi`), for use
    /// with [`Propagator::evolve_prepared`].
    pub fn to_eigenbasis(&self, psi: &StateVector<T>) -> Result<Array1<Complex<T>>> {
        if psi.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: psi.dim(),
            });
        }
        Ok(linalg::adjoint(&self.eig.vectors).dot(psi.amplitudes()))
    }

    /// The eigenvalue phases `exp(-i w_k t)`, for reuse across many states
    /// at the same time.
    pub fn phase_factors(&self, t: T) -> Array1<Complex<T>> {
        Array1::from_shape_fn(self.dim(), |k| {
            let phase = -self.eig.values[k] * t;
            Complex::new(phase.cos(), phase.sin())
        })
    }

    /// Apply precomputed phase factors to eigenbasis coefficients and rotate
    /// back to the computational basis.
    pub fn apply_phases(
        &self,
        coeffs: &Array1<Complex<T>>,
        phases: &Array1<Complex<T>>,
    ) -> StateVector<T> {
        let phased = Array1::from_shape_fn(coeffs.len(), |k| coeffs[k] * phases[k]);
        StateVector {
            amplitudes: self.eig.vectors.dot(&phased),
        }
    }

    /// `exp(-iHt)` applied to a state already expressed in the eigenbasis.
    pub fn evolve_prepared(&self, coeffs: &Array1<Complex<T>>, t: T) -> StateVector<T> {
        self.apply_phases(coeffs, &self.phase_factors(t))
    }

    pub fn evolve(&self, psi: &StateVector<T>, t: T) -> Result<StateVector<T>> {
        let coeffs = self.to_eigenbasis(psi)?;
        Ok(self.evolve_prepared(&coeffs, t))
    }
}

/// `exp(-iHt)|psi>` via eigendecomposition of `H`.
pub fn evolve_unitary<T: Scalar>(
    psi: &StateVector<T>,
    hamiltonian: &HermitianOperator<T>,
    t: T,
) -> Result<StateVector<T>> {
    Propagator::new(hamiltonian)?.evolve(psi, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_abs_diff;
    use ndarray::array;

    fn ket(amplitudes: Vec<Complex<f64>>) -> StateVector<f64> {
        StateVector::new(Array1::from(amplitudes)).unwrap()
    }

    fn plus_state() -> StateVector<f64> {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        ket(vec![c(r, 0.0), c(r, 0.0)])
    }

    fn bell_state() -> StateVector<f64> {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        ket(vec![c(r, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(r, 0.0)])
    }

    fn diag_rho(p: f64) -> DensityMatrix<f64> {
        DensityMatrix::new(array![
            [c(p, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(1.0 - p, 0.0)]
        ])
        .unwrap()
    }

    #[test]
    fn rejects_unnormalized_state() {
        let bad = StateVector::new(Array1::from(vec![c(1.0, 0.0), c(0.5, 0.0)]));
        assert!(matches!(bad, Err(Error::NotNormalized { .. })));
    }

    #[test]
    fn rejects_non_hermitian_density() {
        let m = array![[c(0.5, 0.0), c(0.3, 0.0)], [c(0.1, 0.0), c(0.5, 0.0)]];
        assert!(matches!(
            DensityMatrix::new(m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn rejects_negative_eigenvalue() {
        let m = array![[c(1.2, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-0.2, 0.0)]];
        assert!(matches!(
            DensityMatrix::new(m),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
    }

    #[test]
    fn rejects_wrong_trace() {
        let m = array![[c(0.7, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.7, 0.0)]];
        assert!(matches!(
            DensityMatrix::new(m),
            Err(Error::NonUnitTrace { .. })
        ));
    }

    #[test]
    fn psd_sqrt_of_maximally_mixed() {
        let rho = DensityMatrix::<f64>::maximally_mixed(2);
        let s = psd_sqrt(&rho).unwrap();
        let expect = identity_scaled(2, std::f64::consts::FRAC_1_SQRT_2);
        assert!(max_abs_diff(&s, &expect) < 1e-12);
    }

    fn identity_scaled(n: usize, x: f64) -> Array2<Complex<f64>> {
        Array2::from_diag_elem(n, c(x, 0.0))
    }

    #[test]
    fn psd_sqrt_of_projector_is_projector() {
        let rho = plus_state().projector();
        let s = psd_sqrt(&rho).unwrap();
        assert!(max_abs_diff(&s, rho.entries()) < 1e-12);
    }

    #[test]
    fn psd_sqrt_of_diagonal() {
        let rho = diag_rho(0.81);
        let s = psd_sqrt(&rho).unwrap();
        assert!((s[(0, 0)].re - 0.9).abs() < 1e-13);
        assert!((s[(1, 1)].re - 0.19f64.sqrt()).abs() < 1e-13);
        assert!(s[(0, 1)].norm() < 1e-13);
    }

    #[test]
    fn psd_sqrt_squares_back() {
        let rho = diag_rho(0.3);
        let s = psd_sqrt(&rho).unwrap();
        assert!(max_abs_diff(&s.dot(&s), rho.entries()) < 1e-12);
    }

    #[test]
    fn entropy_examples() {
        let pure = plus_state().projector();
        assert!(von_neumann_entropy(&pure, std::f64::consts::E).unwrap() < 1e-10);

        let mixed = DensityMatrix::<f64>::maximally_mixed(2);
        assert!((von_neumann_entropy(&mixed, 2.0).unwrap() - 1.0).abs() < 1e-12);

        // Direct scalar evaluation as the oracle.
        let expected = -(0.9f64 * 0.9f64.ln() + 0.1 * 0.1f64.ln());
        let got = von_neumann_entropy(&diag_rho(0.9), std::f64::consts::E).unwrap();
        assert!((got - expected).abs() < 1e-12);
        assert!((expected - 0.3251).abs() < 1e-4);
    }

    #[test]
    fn purity_examples() {
        assert!((purity(&plus_state().projector()) - 1.0).abs() < 1e-12);
        assert!((purity(&DensityMatrix::<f64>::maximally_mixed(2)) - 0.5).abs() < 1e-12);
        // Sum of squared eigenvalues as the oracle.
        assert!((purity(&diag_rho(0.75)) - (0.75f64.powi(2) + 0.25f64.powi(2))).abs() < 1e-12);
    }

    #[test]
    fn partial_trace_of_product_state() {
        let sys = plus_state();
        let env = ket(vec![c(0.6, 0.0), c(0.0, 0.8)]);
        let joint = sys.tensor(&env);
        let part = Bipartition::new(2, 2);
        let rho_s = joint.partial_trace(part, Keep::System).unwrap();
        assert!(max_abs_diff(rho_s.entries(), sys.projector().entries()) < 1e-12);
        let rho_e = joint.partial_trace(part, Keep::Environment).unwrap();
        assert!(max_abs_diff(rho_e.entries(), env.projector().entries()) < 1e-12);
    }

    #[test]
    fn partial_trace_of_bell_state_is_maximally_mixed() {
        let rho_s = bell_state()
            .partial_trace(Bipartition::new(2, 2), Keep::System)
            .unwrap();
        assert!(
            max_abs_diff(
                rho_s.entries(),
                DensityMatrix::<f64>::maximally_mixed(2).entries()
            ) < 1e-12
        );
    }

    #[test]
    fn partial_trace_dimension_mismatch() {
        let out = bell_state().partial_trace(Bipartition::new(2, 3), Keep::System);
        assert!(matches!(out, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn fidelity_examples() {
        let rho = diag_rho(0.3);
        assert!((fidelity(&rho, &rho).unwrap() - 1.0).abs() < 1e-10);

        let up = ket(vec![c(1.0, 0.0), c(0.0, 0.0)]).projector();
        let down = ket(vec![c(0.0, 0.0), c(1.0, 0.0)]).projector();
        assert!(fidelity(&up, &down).unwrap() < 1e-12);

        // Pure states with squared overlap 1/2.
        let plus = plus_state().projector();
        assert!((fidelity(&up, &plus).unwrap() - 0.5).abs() < 1e-10);
    }

    #[test]
    fn concurrence_examples() {
        let part = Bipartition::new(2, 2);
        let product = plus_state().tensor(&plus_state());
        assert!(concurrence_pure(&product, part).unwrap() < 1e-10);
        assert!((concurrence_pure(&bell_state(), part).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn concurrence_requires_qubit_system() {
        let psi = ket(vec![
            c(1.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
        ]);
        let out = concurrence_pure(&psi, Bipartition::new(3, 2));
        assert!(matches!(out, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn evolution_at_zero_time_is_identity() {
        let h = pauli_x::<f64>();
        let psi = ket(vec![c(0.8, 0.0), c(0.0, 0.6)]);
        let out = evolve_unitary(&psi, &h, 0.0).unwrap();
        let d: f64 = psi
            .amplitudes()
            .iter()
            .zip(out.amplitudes().iter())
            .map(|(a, b)| (*a - *b).norm())
            .fold(0.0, f64::max);
        assert!(d < 1e-12);
    }

    #[test]
    fn eigenstate_acquires_phase_only() {
        let h = pauli_z::<f64>();
        let up = ket(vec![c(1.0, 0.0), c(0.0, 0.0)]);
        let out = evolve_unitary(&up, &h, 1.3).unwrap();
        // Populations unchanged, amplitude is a pure phase of e^{-i t}.
        assert!((out.amplitudes()[0].norm() - 1.0).abs() < 1e-12);
        assert!((out.amplitudes()[0] - c((1.3f64).cos(), -(1.3f64).sin())).norm() < 1e-12);
    }

    #[test]
    fn evolution_composes_over_time() {
        let h = HermitianOperator::new(array![
            [c(0.4, 0.0), c(0.2, 0.7)],
            [c(0.2, -0.7), c(-0.9, 0.0)]
        ])
        .unwrap();
        let psi = plus_state();
        let a = evolve_unitary(&evolve_unitary(&psi, &h, 0.7).unwrap(), &h, 1.9).unwrap();
        let b = evolve_unitary(&psi, &h, 2.6).unwrap();
        let d: f64 = a
            .amplitudes()
            .iter()
            .zip(b.amplitudes().iter())
            .map(|(x, y)| (*x - *y).norm())
            .fold(0.0, f64::max);
        assert!(d < 1e-10);
        // Norm preserved.
        let n: f64 = a.amplitudes().iter().map(|x| x.norm_sqr()).sum();
        assert!((n - 1.0).abs() < 1e-10);
    }

    #[test]
    fn hermitian_eigs_rejects_non_hermitian() {
        let m = array![[c(0.0, 0.0), c(1.0, 0.0)], [c(0.5, 0.0), c(0.0, 0.0)]];
        assert!(matches!(
            hermitian_eigs(&m),
            Err(Error::NotHermitian { .. })
        ));
    }
}
