//! The four normalized distance measures between density matrices, the
//! distance-change functional used to witness initial correlations, and the
//! subadditivity machinery behind the correlation-witness bound.
//!
//! All four measures map into [0, 1]. The Jensen-Shannon divergence uses
//! base-2 entropy so its supremum is exactly 1; the natural-log variant is
//! available through [`jensen_shannon_in_base`].

use ndarray::Array2;
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg;
use crate::quantum::{entropy_of_spectrum, psd_sqrt, Bipartition, DensityMatrix, Keep};
use crate::scalar::{tol, Scalar};

/// Which distance measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasureKind {
    Trace,
    Bures,
    Hellinger,
    JensenShannon,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 4] = [
        MeasureKind::Trace,
        MeasureKind::Bures,
        MeasureKind::Hellinger,
        MeasureKind::JensenShannon,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            MeasureKind::Trace => "trace",
            MeasureKind::Bures => "bures",
            MeasureKind::Hellinger => "hellinger",
            MeasureKind::JensenShannon => "jensen-shannon",
        }
    }

    pub fn index(&self) -> usize {
        match self {
            MeasureKind::Trace => 0,
            MeasureKind::Bures => 1,
            MeasureKind::Hellinger => 2,
            MeasureKind::JensenShannon => 3,
        }
    }
}

fn check_dims<T: Scalar>(rho1: &DensityMatrix<T>, rho2: &DensityMatrix<T>) -> Result<()> {
    if rho1.dim() != rho2.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho1.dim(),
            got: rho2.dim(),
        });
    }
    Ok(())
}

/// Outer square root with the small-negative-radicand clamp. A radicand
/// below the clamp band signals a bug upstream, not roundoff.
fn outer_sqrt<T: Scalar>(radicand: T) -> Result<T> {
    if radicand >= T::zero() {
        Ok(radicand.sqrt())
    } else if radicand >= -tol::radicand::<T>() {
        Ok(T::zero())
    } else {
        Err(Error::Inconsistent(format!(
            "negative radicand {:e}",
            radicand.to_f64().unwrap_or(f64::NAN)
        )))
    }
}

/// Trace distance: half the sum of the absolute eigenvalues of `rho1 - rho2`.
pub fn trace_distance<T: Scalar>(rho1: &DensityMatrix<T>, rho2: &DensityMatrix<T>) -> Result<T> {
    check_dims(rho1, rho2)?;
    let diff = rho1.entries() - rho2.entries();
    let w = linalg::hermitian_eigenvalues(&diff)?;
    let sum: T = w.iter().map(|x| x.abs()).sum();
    Ok(sum * T::from_f64_lossy(0.5))
}

/// Bures metric `sqrt(1 - sqrt(F))`.
pub fn bures<T: Scalar>(rho1: &DensityMatrix<T>, rho2: &DensityMatrix<T>) -> Result<T> {
    let f = crate::quantum::fidelity(rho1, rho2)?;
    outer_sqrt(T::one() - f.sqrt())
}

/// Hellinger distance `sqrt(1 - Tr(sqrt(rho2) sqrt(rho1)))`.
pub fn hellinger<T: Scalar>(rho1: &DensityMatrix<T>, rho2: &DensityMatrix<T>) -> Result<T> {
    check_dims(rho1, rho2)?;
    let s1 = psd_sqrt(rho1)?;
    let s2 = psd_sqrt(rho2)?;
    let affinity = real_trace_of_product(&s2, &s1);
    outer_sqrt(T::one() - affinity)
}

/// `Re Tr(a b)` without forming the product matrix.
fn real_trace_of_product<T: Scalar>(a: &Array2<Complex<T>>, b: &Array2<Complex<T>>) -> T {
    let n = a.nrows();
    let mut acc = T::zero();
    for i in 0..n {
        for k in 0..n {
            acc += (a[(i, k)] * b[(k, i)]).re;
        }
    }
    acc
}

/// Jensen-Shannon distance with base-2 entropy, so that orthogonal pure
/// states sit at exactly 1.
pub fn jensen_shannon<T: Scalar>(rho1: &DensityMatrix<T>, rho2: &DensityMatrix<T>) -> Result<T> {
    jensen_shannon_in_base(rho1, rho2, T::from_f64_lossy(2.0))
}

/// Jensen-Shannon distance in an arbitrary entropy base (e restores the
/// natural-log behavior, with supremum `sqrt(ln 2)` instead of 1).
pub fn jensen_shannon_in_base<T: Scalar>(
    rho1: &DensityMatrix<T>,
    rho2: &DensityMatrix<T>,
    log_base: T,
) -> Result<T> {
    check_dims(rho1, rho2)?;
    let half = Complex::new(T::from_f64_lossy(0.5), T::zero());
    let avg = (rho1.entries() + rho2.entries()).mapv(|x| x * half);
    let w_avg = linalg::hermitian_eigenvalues(&avg)?;
    let w1 = rho1.eigenvalues()?;
    let w2 = rho2.eigenvalues()?;
    let s_avg = entropy_of_spectrum(&w_avg, log_base);
    let s1 = entropy_of_spectrum(&w1, log_base);
    let s2 = entropy_of_spectrum(&w2, log_base);
    let h = T::from_f64_lossy(0.5);
    outer_sqrt(s_avg - h * s1 - h * s2)
}

/// Dispatch on the measure kind.
pub fn distance<T: Scalar>(
    kind: MeasureKind,
    rho1: &DensityMatrix<T>,
    rho2: &DensityMatrix<T>,
) -> Result<T> {
    match kind {
        MeasureKind::Trace => trace_distance(rho1, rho2),
        MeasureKind::Bures => bures(rho1, rho2),
        MeasureKind::Hellinger => hellinger(rho1, rho2),
        MeasureKind::JensenShannon => jensen_shannon(rho1, rho2),
    }
}

/// All four measures at once, sharing the eigendecompositions of the two
/// inputs. Indexed by [`MeasureKind::index`]. Equal to calling the four
/// measures separately; the sweep engines use this form. Qubit pairs take a
/// closed-form route (2x2 spectra, Cayley-Hamilton square roots, singular
/// values of the root product) that the tests pin against the general one.
pub fn all_measures<T: Scalar>(
    rho1: &DensityMatrix<T>,
    rho2: &DensityMatrix<T>,
) -> Result<[T; 4]> {
    check_dims(rho1, rho2)?;
    if rho1.dim() == 2 {
        return all_measures_qubit(rho1, rho2);
    }
    let half_c = Complex::new(T::from_f64_lossy(0.5), T::zero());
    let half = T::from_f64_lossy(0.5);
    let two = T::from_f64_lossy(2.0);

    let eig1 = rho1.eig()?;
    let eig2 = rho2.eig()?;
    for w in eig1.values.iter().chain(eig2.values.iter()) {
        if *w < -tol::psd::<T>() {
            return Err(Error::NotPositiveSemidefinite {
                eigenvalue: w.to_f64().unwrap_or(f64::NAN),
            });
        }
    }

    let diff = rho1.entries() - rho2.entries();
    let w_diff = linalg::hermitian_eigenvalues(&diff)?;
    let d_trace = w_diff.iter().map(|x| x.abs()).sum::<T>() * half;

    let sqrt1 = eig1.values.mapv(|w| w.max(T::zero()).sqrt());
    let sqrt2 = eig2.values.mapv(|w| w.max(T::zero()).sqrt());
    let s1 = linalg::from_eigen(&sqrt1, &eig1.vectors);
    let s2 = linalg::from_eigen(&sqrt2, &eig2.vectors);
    let m = s2.dot(&s1);
    let gram = linalg::adjoint(&m).dot(&m);
    let w_gram = linalg::hermitian_eigenvalues(&gram)?;
    let trace_norm: T = w_gram.iter().map(|&x| x.max(T::zero()).sqrt()).sum();
    let f = (trace_norm * trace_norm).min(T::one());
    let d_bures = outer_sqrt(T::one() - f.sqrt())?;

    let affinity = m.diag().iter().map(|x| x.re).sum::<T>();
    let d_hellinger = outer_sqrt(T::one() - affinity)?;

    let avg = (rho1.entries() + rho2.entries()).mapv(|x| x * half_c);
    let w_avg = linalg::hermitian_eigenvalues(&avg)?;
    let s_avg = entropy_of_spectrum(&w_avg, two);
    let s_1 = entropy_of_spectrum(&eig1.values, two);
    let s_2 = entropy_of_spectrum(&eig2.values, two);
    let d_js = outer_sqrt(s_avg - half * s_1 - half * s_2)?;

    Ok([d_trace, d_bures, d_hellinger, d_js])
}

/// Change of a distance over time relative to its initial value:
/// `D(rho_t_corr, rho_t_ref) - D(rho_0_corr, rho_0_ref)`.
pub fn delta_distance<T: Scalar>(
    kind: MeasureKind,
    rho_t_corr: &DensityMatrix<T>,
    rho_t_ref: &DensityMatrix<T>,
    rho_0_corr: &DensityMatrix<T>,
    rho_0_ref: &DensityMatrix<T>,
) -> Result<T> {
    Ok(distance(kind, rho_t_corr, rho_t_ref)? - distance(kind, rho_0_corr, rho_0_ref)?)
}

/// `Q(R, S) = sqrt(1 - sqrt(R)) + sqrt(1 - sqrt(S)) - sqrt(1 - sqrt(R S))`,
/// nonnegative on the unit square; identifying `R` and `S` with fidelities
/// and using fidelity multiplicativity over tensor products turns this into
/// the subadditivity of the Bures metric.
pub fn q_function<T: Scalar>(r: T, s: T) -> Result<T> {
    for (what, v) in [("R", r), ("S", s)] {
        if v < T::zero() || v > T::one() {
            return Err(Error::OutOfRange {
                what: if what == "R" { "R" } else { "S" },
                value: v.to_f64().unwrap_or(f64::NAN),
                min: 0.0,
                max: 1.0,
            });
        }
    }
    let a = outer_sqrt(T::one() - r.sqrt())?;
    let b = outer_sqrt(T::one() - s.sqrt())?;
    let ab = outer_sqrt(T::one() - (r * s).sqrt())?;
    Ok(a + b - ab)
}

/// Right-hand side of the correlation-witness bound for a pair of bipartite
/// states: total correlations of each state (trace distance to the product
/// of its marginals) plus the distinguishability of the environments.
pub fn witness_bound_rhs<T: Scalar>(
    rho_se_1: &DensityMatrix<T>,
    rho_se_2: &DensityMatrix<T>,
    part: Bipartition,
) -> Result<T> {
    check_dims(rho_se_1, rho_se_2)?;
    let mut total = T::zero();
    let mut env_marginals = Vec::with_capacity(2);
    for rho_se in [rho_se_1, rho_se_2] {
        let rho_s = rho_se.partial_trace(part, Keep::System)?;
        let rho_e = rho_se.partial_trace(part, Keep::Environment)?;
        total += trace_distance(rho_se, &rho_s.tensor(&rho_e))?;
        env_marginals.push(rho_e);
    }
    total += trace_distance(&env_marginals[0], &env_marginals[1])?;
    Ok(total)
}
