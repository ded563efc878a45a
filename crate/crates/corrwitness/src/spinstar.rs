//! Central spin exchanging excitations with a bath of `N` spins through a
//! uniform XY coupling.
//!
//! For the correlated initial states used here the dynamics never leaves a
//! five-dimensional subspace spanned by the central-spin levels combined with
//! the top three rungs of the symmetric bath ladder, so the exact reduced
//! state comes from a 5x5 Hamiltonian. [`BruteForceSpinStar`] cross-checks
//! this against the full `2^(N+1)`-dimensional product-basis evolution for
//! small baths.

use ndarray::{Array1, Array2};
use num_complex::Complex;

use crate::dephasing::CorrelatedStateSpec;
use crate::error::{Error, Result};
use crate::quantum::{Bipartition, DensityMatrix, HermitianOperator, Keep, Propagator, StateVector};
use crate::scalar::{c, Scalar};

/// Spin-star specs share the amplitude/lambda/unitary parameterization of
/// the bosonic model; only the correlated field state differs.
pub type SpinStarStateSpec<T> = CorrelatedStateSpec<T>;

/// Largest bath for which the full `2^(N+1)` oracle is allowed to run.
pub const MAX_ORACLE_BATH: usize = 12;

/// Coupling strength and bath size.
#[derive(Debug, Clone, Copy)]
pub struct SpinStarParams<T: Scalar> {
    pub coupling: T,
    pub bath_size: usize,
}

impl<T: Scalar> SpinStarParams<T> {
    pub fn new(coupling: T, bath_size: usize) -> Result<Self> {
        if bath_size < 2 {
            return Err(Error::BathSize {
                n: bath_size,
                min: 2,
                max: usize::MAX,
            });
        }
        if coupling == T::zero() {
            return Err(Error::OutOfRange {
                what: "coupling",
                value: 0.0,
                min: f64::MIN_POSITIVE,
                max: f64::INFINITY,
            });
        }
        Ok(Self {
            coupling,
            bath_size,
        })
    }
}

impl<T: Scalar> Default for SpinStarParams<T> {
    fn default() -> Self {
        Self {
            coupling: T::one(),
            bath_size: 20,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ladder {
    Raise,
    Lower,
}

/// Matrix element of the angular-momentum ladder operators:
/// `J_-|j,m> = sqrt(j(j+1) - m(m-1)) |j,m-1>` and the raising analogue.
/// Returns zero at the ends of the ladder.
pub fn ladder_coefficient<T: Scalar>(j: T, m: T, direction: Ladder) -> Result<T> {
    if j < T::zero() || m.abs() > j + T::from_f64_lossy(1e-9) {
        return Err(Error::OutOfRange {
            what: "m",
            value: m.to_f64().unwrap_or(f64::NAN),
            min: -j.to_f64().unwrap_or(f64::NAN),
            max: j.to_f64().unwrap_or(f64::NAN),
        });
    }
    let target = match direction {
        Ladder::Lower => m * (m - T::one()),
        Ladder::Raise => m * (m + T::one()),
    };
    Ok((j * (j + T::one()) - target).max(T::zero()).sqrt())
}

/// Normalization of the bath superposition `(1-lambda)|chi_+> + lambda|chi_->`
/// (the two kets are orthonormal, unlike the bosonic case).
pub fn normalization_c_tilde<T: Scalar>(lambda: T) -> T {
    let one = T::one();
    T::one() / ((one - lambda) * (one - lambda) + lambda * lambda).sqrt()
}

/// Invariant-subspace basis order: `|e,chi_+>, |g,chi_+>, |e,chi_->,
/// |g,chi_->, |e,chi_-->`.
pub const SUBSPACE_DIM: usize = 5;

/// The Hamiltonian restricted to the invariant subspace. Nonzero couplings:
/// `<g,chi_+|H|e,chi_-> = A0 sqrt(N)` and
/// `<g,chi_-|H|e,chi_--> = A0 sqrt(2N - 2)`, plus conjugates; `|e,chi_+>` is
/// annihilated.
pub fn hamiltonian_subspace<T: Scalar>(params: &SpinStarParams<T>) -> HermitianOperator<T> {
    let j = T::from_usize(params.bath_size).expect("bath size fits scalar")
        * T::from_f64_lossy(0.5);
    let g1 = params.coupling
        * ladder_coefficient(j, j, Ladder::Lower).expect("valid ladder entry");
    let g2 = params.coupling
        * ladder_coefficient(j, j - T::one(), Ladder::Lower).expect("valid ladder entry");
    let mut m = Array2::zeros((SUBSPACE_DIM, SUBSPACE_DIM));
    m[(1, 2)] = c(g1, T::zero());
    m[(2, 1)] = c(g1, T::zero());
    m[(3, 4)] = c(g2, T::zero());
    m[(4, 3)] = c(g2, T::zero());
    HermitianOperator::new(m).expect("construction is Hermitian")
}

/// Exact reduced dynamics through the invariant subspace.
pub struct SpinStarModel<T: Scalar> {
    params: SpinStarParams<T>,
    propagator: Propagator<T>,
}

impl<T: Scalar> SpinStarModel<T> {
    pub fn new(params: SpinStarParams<T>) -> Result<Self> {
        let propagator = Propagator::new(&hamiltonian_subspace(&params))?;
        Ok(Self { params, propagator })
    }

    pub fn params(&self) -> &SpinStarParams<T> {
        &self.params
    }

    pub(crate) fn propagator(&self) -> &Propagator<T> {
        &self.propagator
    }

    /// Initial state components on the subspace basis.
    pub fn initial_subspace_state(&self, spec: &SpinStarStateSpec<T>) -> StateVector<T> {
        let ct = normalization_c_tilde(spec.lambda());
        let w_plus = c(ct * (T::one() - spec.lambda()), T::zero());
        let w_minus = c(ct * spec.lambda(), T::zero());
        let u = spec.unitary();
        let c1 = spec.b1() * u[(0, 0)];
        let c2 = spec.b2() * u[(0, 1)];
        let d1 = spec.b1() * u[(1, 0)];
        let d2 = spec.b2() * u[(1, 1)];
        let mut amps = Array1::zeros(SUBSPACE_DIM);
        amps[0] = c1 + c2 * w_plus;
        amps[1] = d1 + d2 * w_plus;
        amps[2] = c2 * w_minus;
        amps[3] = d2 * w_minus;
        StateVector::new(amps).expect("unitarity of the local rotation preserves the norm")
    }

    /// Embed a subspace vector into the 2x3 system/environment product space
    /// (environment labels: chi_+, chi_-, chi_--) and trace out the bath.
    pub(crate) fn reduce_subspace_vector(&self, psi: &StateVector<T>) -> Result<DensityMatrix<T>> {
        let a = psi.amplitudes();
        let mut full = Array1::zeros(6);
        full[0] = a[0]; // e, chi_+
        full[3] = a[1]; // g, chi_+
        full[1] = a[2]; // e, chi_-
        full[4] = a[3]; // g, chi_-
        full[2] = a[4]; // e, chi_--
        let embedded = StateVector::new(full)?;
        embedded.partial_trace(Bipartition::new(2, 3), Keep::System)
    }

    /// The 2x2 reduced state of the central spin at time `t`.
    pub fn reduced_state(&self, spec: &SpinStarStateSpec<T>, t: T) -> Result<DensityMatrix<T>> {
        let psi0 = self.initial_subspace_state(spec);
        let psi_t = self.propagator.evolve(&psi0, t)?;
        self.reduce_subspace_vector(&psi_t)
    }
}

/// Full product-basis oracle. Bath configuration `b` has bit `k` set when
/// bath spin `k` points down; the system index is slowest, so the composite
/// index is `s * 2^N + b` with `s = 0` for `|e>`.
pub struct BruteForceSpinStar<T: Scalar> {
    params: SpinStarParams<T>,
    propagator: Propagator<T>,
    hamiltonian: HermitianOperator<T>,
    /// chi_+, chi_-, chi_-- in the product basis.
    dicke: [Array1<Complex<T>>; 3],
}

impl<T: Scalar> BruteForceSpinStar<T> {
    pub fn new(params: SpinStarParams<T>) -> Result<Self> {
        let n = params.bath_size;
        if n > MAX_ORACLE_BATH {
            return Err(Error::BathSize {
                n,
                min: 2,
                max: MAX_ORACLE_BATH,
            });
        }
        let hamiltonian = full_hamiltonian(&params);
        let propagator = Propagator::new(&hamiltonian)?;

        let bath_dim = 1usize << n;
        let mut chi_plus = Array1::zeros(bath_dim);
        chi_plus[0] = c(T::one(), T::zero());
        let chi_minus = normalized(collective_lower(&chi_plus, n));
        let chi_minus2 = normalized(collective_lower(&chi_minus, n));
        Ok(Self {
            params,
            propagator,
            hamiltonian,
            dicke: [chi_plus, chi_minus, chi_minus2],
        })
    }

    pub fn hamiltonian(&self) -> &HermitianOperator<T> {
        &self.hamiltonian
    }

    /// A subspace basis ket embedded in the full product space.
    pub fn subspace_basis_vector(&self, index: usize) -> StateVector<T> {
        let (system, bath) = match index {
            0 => (0, 0),
            1 => (1, 0),
            2 => (0, 1),
            3 => (1, 1),
            4 => (0, 2),
            _ => panic!("subspace index out of range"),
        };
        let bath_dim = 1usize << self.params.bath_size;
        let mut amps = Array1::zeros(2 * bath_dim);
        for (i, &v) in self.dicke[bath].iter().enumerate() {
            amps[system * bath_dim + i] = v;
        }
        StateVector::new(amps).expect("Dicke states are normalized")
    }

    /// The total initial state in the full product basis.
    pub fn total_state(&self, spec: &SpinStarStateSpec<T>) -> StateVector<T> {
        let n = self.params.bath_size;
        let bath_dim = 1usize << n;
        let ct = normalization_c_tilde(spec.lambda());
        let u = spec.unitary();
        let c1 = spec.b1() * u[(0, 0)];
        let c2 = spec.b2() * u[(0, 1)];
        let d1 = spec.b1() * u[(1, 0)];
        let d2 = spec.b2() * u[(1, 1)];
        let w_plus = c(ct * (T::one() - spec.lambda()), T::zero());
        let w_minus = c(ct * spec.lambda(), T::zero());

        let mut amps = Array1::zeros(2 * bath_dim);
        for (i, (&plus, &minus)) in self.dicke[0].iter().zip(self.dicke[1].iter()).enumerate() {
            let correlated = plus * w_plus + minus * w_minus;
            amps[i] = c1 * plus + c2 * correlated;
            amps[bath_dim + i] = d1 * plus + d2 * correlated;
        }
        StateVector::new(amps).expect("unitarity preserves the norm")
    }

    pub fn evolve_total(&self, spec: &SpinStarStateSpec<T>, t: T) -> Result<StateVector<T>> {
        self.propagator.evolve(&self.total_state(spec), t)
    }

    /// Reduced state of the central spin by full-space evolution.
    pub fn reduced(&self, spec: &SpinStarStateSpec<T>, t: T) -> Result<DensityMatrix<T>> {
        let psi_t = self.evolve_total(spec, t)?;
        psi_t.partial_trace(
            Bipartition::new(2, 1usize << self.params.bath_size),
            Keep::System,
        )
    }
}

/// One-shot oracle evaluation; rebuilds the full eigendecomposition every
/// call, so prefer [`BruteForceSpinStar`] for sweeps.
pub fn brute_force_reduced<T: Scalar>(
    params: &SpinStarParams<T>,
    spec: &SpinStarStateSpec<T>,
    t: T,
) -> Result<DensityMatrix<T>> {
    BruteForceSpinStar::new(*params)?.reduced(spec, t)
}

/// `J_- v` on the product basis (bit set = spin down).
fn collective_lower<T: Scalar>(v: &Array1<Complex<T>>, n: usize) -> Array1<Complex<T>> {
    let dim = v.len();
    let mut out = Array1::zeros(dim);
    for b in 0..dim {
        if v[b].norm_sqr() == T::zero() {
            continue;
        }
        for k in 0..n {
            if b & (1 << k) == 0 {
                out[b | (1 << k)] += v[b];
            }
        }
    }
    out
}

fn normalized<T: Scalar>(v: Array1<Complex<T>>) -> Array1<Complex<T>> {
    let norm: T = v.iter().map(|x| x.norm_sqr()).sum::<T>().sqrt();
    v.mapv(|x| x / c(norm, T::zero()))
}

/// `A0 (sigma_+ J_- + sigma_- J_+)` on the full product basis.
fn full_hamiltonian<T: Scalar>(params: &SpinStarParams<T>) -> HermitianOperator<T> {
    let n = params.bath_size;
    let bath_dim = 1usize << n;
    let dim = 2 * bath_dim;
    let a0 = c(params.coupling, T::zero());
    let mut m = Array2::zeros((dim, dim));
    for b in 0..bath_dim {
        for k in 0..n {
            if b & (1 << k) == 0 {
                // sigma_+ J_-: |g, b> -> |e, b with spin k flipped down>.
                let b_low = b | (1 << k);
                m[(b_low, bath_dim + b)] += a0;
                m[(bath_dim + b, b_low)] += a0;
            }
        }
    }
    HermitianOperator::new(m).expect("construction is Hermitian")
}

/// Diagonal of the total excitation number `sigma_z/2 + J_z` on the product
/// basis, for conservation checks.
pub fn excitation_observable<T: Scalar>(params: &SpinStarParams<T>) -> HermitianOperator<T> {
    let n = params.bath_size;
    let bath_dim = 1usize << n;
    let half = T::from_f64_lossy(0.5);
    let mut m = Array2::zeros((2 * bath_dim, 2 * bath_dim));
    for s in 0..2usize {
        let s_z = if s == 0 { half } else { -half };
        for b in 0..bath_dim {
            let downs = T::from_u32((b as u32).count_ones()).expect("count fits scalar");
            let j_z = T::from_usize(n).expect("bath size fits scalar") * half - downs;
            m[(s * bath_dim + b, s * bath_dim + b)] = c(s_z + j_z, T::zero());
        }
    }
    HermitianOperator::new(m).expect("diagonal is Hermitian")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::trace_distance;
    use crate::linalg;
    use crate::quantum::purity;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_spec(rng: &mut ChaCha8Rng, lambda: f64) -> SpinStarStateSpec<f64> {
        let (b1, b2) = crate::experiments::random_amplitudes::<f64, _>(rng);
        crate::dephasing::family_spec(
            crate::dephasing::StateFamily::HaarRandom,
            b1,
            b2,
            lambda,
            Some(rng),
        )
        .unwrap()
    }

    #[test]
    fn ladder_examples() {
        for n in [2usize, 4, 7, 20] {
            let j = n as f64 / 2.0;
            let low_top = ladder_coefficient(j, j, Ladder::Lower).unwrap();
            assert!((low_top - (n as f64).sqrt()).abs() < 1e-12);
            let low_next = ladder_coefficient(j, j - 1.0, Ladder::Lower).unwrap();
            assert!((low_next - (2.0 * n as f64 - 2.0).sqrt()).abs() < 1e-12);
            assert!(ladder_coefficient(j, j, Ladder::Raise).unwrap().abs() < 1e-12);
        }
        assert!(ladder_coefficient(1.0, 1.5, Ladder::Lower).is_err());
    }

    #[test]
    fn subspace_hamiltonian_structure() {
        let params = SpinStarParams::new(1.0f64, 4).unwrap();
        let h = hamiltonian_subspace(&params);
        let m = h.entries();
        // |e, chi_+> is annihilated.
        for k in 0..SUBSPACE_DIM {
            assert!(m[(0, k)].norm() < 1e-15);
            assert!(m[(k, 0)].norm() < 1e-15);
        }
        assert!((m[(1, 2)].re - 2.0).abs() < 1e-12);
        assert!((m[(3, 4)].re - 6.0f64.sqrt()).abs() < 1e-12);
        // Everything else vanishes.
        let mut nonzero = 0;
        for i in 0..SUBSPACE_DIM {
            for j in 0..SUBSPACE_DIM {
                if m[(i, j)].norm() > 1e-15 {
                    nonzero += 1;
                }
            }
        }
        assert_eq!(nonzero, 4);
    }

    #[test]
    fn subspace_hamiltonian_matches_full_matrix_elements() {
        for n in [2usize, 4, 6, 8] {
            let params = SpinStarParams::new(0.8, n).unwrap();
            let oracle = BruteForceSpinStar::new(params).unwrap();
            let h_sub = hamiltonian_subspace(&params);
            let h_full = oracle.hamiltonian();
            for i in 0..SUBSPACE_DIM {
                let vi = oracle.subspace_basis_vector(i);
                let h_vi = h_full.entries().dot(vi.amplitudes());
                for j in 0..SUBSPACE_DIM {
                    let vj = oracle.subspace_basis_vector(j);
                    let elem: Complex<f64> = vj
                        .amplitudes()
                        .iter()
                        .zip(h_vi.iter())
                        .map(|(a, b)| a.conj() * b)
                        .sum();
                    assert!(
                        (elem - h_sub.entries()[(j, i)]).norm() < 1e-12,
                        "N = {n}, element ({j}, {i})"
                    );
                }
            }
        }
    }

    #[test]
    fn excited_top_is_stationary() {
        let params = SpinStarParams::new(1.3, 6).unwrap();
        let model = SpinStarModel::new(params).unwrap();
        let spec =
            SpinStarStateSpec::new(c(1.0, 0.0), c(0.0, 0.0), 0.7, linalg::identity(2)).unwrap();
        for i in 0..10 {
            let t = i as f64 * 0.61;
            let rho = model.reduced_state(&spec, t).unwrap();
            assert!((rho.entries()[(0, 0)].re - 1.0).abs() < 1e-12);
            assert!((purity(&rho) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn ground_top_undergoes_rabi_oscillation() {
        let params = SpinStarParams::new(1.0, 4).unwrap();
        let model = SpinStarModel::new(params).unwrap();
        let mut swap = Array2::zeros((2, 2));
        swap[(0, 1)] = c(1.0, 0.0);
        swap[(1, 0)] = c(1.0, 0.0);
        let spec = SpinStarStateSpec::new(c(1.0, 0.0), c(0.0, 0.0), 0.0, swap).unwrap();
        let rabi = (params.bath_size as f64).sqrt() * params.coupling;
        for i in 0..25 {
            let t = i as f64 * 0.17;
            let rho = model.reduced_state(&spec, t).unwrap();
            let expected = (rabi * t).sin().powi(2);
            assert!(
                (rho.entries()[(0, 0)].re - expected).abs() < 1e-10,
                "t = {t}"
            );
        }
    }

    #[test]
    fn subspace_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for n in [2usize, 4, 6] {
            let params = SpinStarParams::new(1.0, n).unwrap();
            let model = SpinStarModel::new(params).unwrap();
            let oracle = BruteForceSpinStar::new(params).unwrap();
            for _ in 0..5 {
                let lambda = rng.gen();
                let spec = random_spec(&mut rng, lambda);
                for i in 0..5 {
                    let t = rng.gen::<f64>() * 8.0;
                    let a = model.reduced_state(&spec, t).unwrap();
                    let b = oracle.reduced(&spec, t).unwrap();
                    assert!(
                        trace_distance(&a, &b).unwrap() < 1e-10,
                        "N = {n}, draw {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn full_evolution_stays_in_subspace() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let params = SpinStarParams::new(1.0, 5).unwrap();
        let oracle = BruteForceSpinStar::new(params).unwrap();
        let basis: Vec<_> = (0..SUBSPACE_DIM)
            .map(|i| oracle.subspace_basis_vector(i))
            .collect();
        let spec = random_spec(&mut rng, 0.6);
        for i in 0..8 {
            let t = i as f64 * 0.83;
            let psi = oracle.evolve_total(&spec, t).unwrap();
            let inside: f64 = basis
                .iter()
                .map(|b| b.overlap(&psi).unwrap().norm_sqr())
                .sum();
            assert!((1.0 - inside).abs() < 1e-12, "t = {t}");
        }
    }

    #[test]
    fn excitation_number_is_conserved() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let params = SpinStarParams::new(1.0, 4).unwrap();
        let oracle = BruteForceSpinStar::new(params).unwrap();
        let observable = excitation_observable(&params);
        let spec = random_spec(&mut rng, 0.35);
        let initial = observable
            .expectation(&oracle.evolve_total(&spec, 0.0).unwrap())
            .unwrap();
        for i in 1..10 {
            let t = i as f64 * 0.47;
            let value = observable
                .expectation(&oracle.evolve_total(&spec, t).unwrap())
                .unwrap();
            assert!((value - initial).abs() < 1e-10);
        }
    }

    #[test]
    fn brute_force_norm_is_preserved() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let params = SpinStarParams::new(1.0, 3).unwrap();
        let oracle = BruteForceSpinStar::new(params).unwrap();
        let spec = random_spec(&mut rng, 0.8);
        let psi = oracle.evolve_total(&spec, 5.3).unwrap();
        let n: f64 = psi.amplitudes().iter().map(|a| a.norm_sqr()).sum();
        assert!((n - 1.0).abs() < 1e-10);
    }

    #[test]
    fn oracle_guards_against_large_baths() {
        let params = SpinStarParams::new(1.0, 16).unwrap();
        assert!(matches!(
            BruteForceSpinStar::new(params),
            Err(Error::BathSize { .. })
        ));
    }

    #[test]
    fn params_validation() {
        assert!(SpinStarParams::new(1.0, 1).is_err());
        assert!(SpinStarParams::new(0.0, 4).is_err());
    }
}
