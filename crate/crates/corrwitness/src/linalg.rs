//! Dense complex linear algebra for small Hilbert spaces.
//!
//! The only nontrivial kernel is a cyclic Jacobi eigensolver for Hermitian
//! matrices, written generically over the real scalar so the whole crate
//! stays scalar-agnostic. Jacobi is a good fit here: every matrix in scope is
//! at most a few hundred rows, the rotations are unconditionally stable, and
//! the accumulated eigenvectors stay unitary to machine precision.

use ndarray::{Array1, Array2};
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Maximum number of Jacobi sweeps before giving up. Well-conditioned inputs
/// converge in fewer than 15 sweeps even at dimension ~500.
const MAX_SWEEPS: usize = 64;

/// Eigendecomposition of a Hermitian matrix: `a = V diag(w) V†` with
/// eigenvalues sorted descending and eigenvectors in the columns of `V`.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T> {
    pub values: Array1<T>,
    pub vectors: Array2<Complex<T>>,
}

/// Conjugate transpose.
pub fn adjoint<T: Scalar>(a: &Array2<Complex<T>>) -> Array2<Complex<T>> {
    let mut out = a.t().to_owned();
    out.mapv_inplace(|x| x.conj());
    out
}

/// Max entrywise modulus of `a - a†`.
pub fn hermiticity_deviation<T: Scalar>(a: &Array2<Complex<T>>) -> T {
    let n = a.nrows();
    let mut dev = T::zero();
    for i in 0..n {
        for j in i..n {
            let d = (a[(i, j)] - a[(j, i)].conj()).norm();
            if d > dev {
                dev = d;
            }
        }
    }
    dev
}

/// Max entrywise modulus of `a - b`.
pub fn max_abs_diff<T: Scalar>(a: &Array2<Complex<T>>, b: &Array2<Complex<T>>) -> T {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (*x - *y).norm())
        .fold(T::zero(), T::max)
}

/// Complex identity matrix.
pub fn identity<T: Scalar>(n: usize) -> Array2<Complex<T>> {
    Array2::eye(n)
}

/// Outer product `x y†`.
pub fn outer<T: Scalar>(x: &Array1<Complex<T>>, y: &Array1<Complex<T>>) -> Array2<Complex<T>> {
    let n = x.len();
    let m = y.len();
    Array2::from_shape_fn((n, m), |(i, j)| x[i] * y[j].conj())
}

/// Rebuild `V diag(w) V†` from an eigendecomposition.
pub fn from_eigen<T: Scalar>(values: &Array1<T>, vectors: &Array2<Complex<T>>) -> Array2<Complex<T>> {
    let n = vectors.nrows();
    let mut scaled = vectors.clone();
    for (j, &w) in values.iter().enumerate() {
        for i in 0..n {
            scaled[(i, j)] = scaled[(i, j)] * Complex::new(w, T::zero());
        }
    }
    scaled.dot(&adjoint(vectors))
}

/// Eigenvalues of a Hermitian matrix, sorted descending.
pub fn hermitian_eigenvalues<T: Scalar>(a: &Array2<Complex<T>>) -> Result<Array1<T>> {
    let (values, _) = jacobi(a, false)?;
    Ok(values)
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn hermitian_eigen<T: Scalar>(a: &Array2<Complex<T>>) -> Result<HermitianEigen<T>> {
    let (values, vt) = jacobi(a, true)?;
    let vt = vt.expect("vectors requested");
    let n = values.len();
    // Rows of `vt` are eigenvectors; expose them as columns.
    let vectors = Array2::from_shape_fn((n, n), |(i, j)| vt[(j, i)]);
    Ok(HermitianEigen { values, vectors })
}

/// Cyclic Jacobi for Hermitian matrices. Only the Hermitian part of the
/// input is referenced: diagonals through their real parts, off-diagonals
/// through the upper triangle. Returns eigenvalues sorted descending and,
/// when requested, the matching eigenvectors as *rows*.
#[allow(clippy::type_complexity)]
fn jacobi<T: Scalar>(
    a: &Array2<Complex<T>>,
    want_vectors: bool,
) -> Result<(Array1<T>, Option<Array2<Complex<T>>>)> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: a.ncols(),
        });
    }
    if n == 0 {
        return Ok((Array1::zeros(0), want_vectors.then(|| Array2::zeros((0, 0)))));
    }

    // Working copy, explicitly Hermitized.
    let mut m = a.clone();
    for i in 0..n {
        m[(i, i)] = Complex::new(m[(i, i)].re, T::zero());
        for j in (i + 1)..n {
            let avg = (m[(i, j)] + m[(j, i)].conj()) * Complex::new(T::from_f64_lossy(0.5), T::zero());
            m[(i, j)] = avg;
            m[(j, i)] = avg.conj();
        }
    }

    let mut vt = want_vectors.then(|| identity::<T>(n));

    let fro_sq: T = m.iter().map(|x| x.norm_sqr()).sum();
    let eps = T::epsilon();
    let done_sq = fro_sq * eps * eps * T::from_f64_lossy(4.0);
    // Entries below this bound cannot push the off-diagonal norm above the
    // convergence target, so rotating on them is wasted work.
    let n_t = T::from_usize(n).expect("dimension fits scalar");
    let skip_sq = fro_sq * (eps / n_t) * (eps / n_t);

    let mut scratch_p = vec![Complex::new(T::zero(), T::zero()); n];
    let mut scratch_q = vec![Complex::new(T::zero(), T::zero()); n];

    let mut converged = false;
    for _sweep in 0..MAX_SWEEPS {
        let mut off_sq = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off_sq += m[(p, q)].norm_sqr();
            }
        }
        if off_sq + off_sq <= done_sq {
            converged = true;
            break;
        }

        let mut rotations = 0usize;
        for p in 0..n {
            for q in (p + 1)..n {
                let b = m[(p, q)];
                if b.norm_sqr() <= skip_sq {
                    continue;
                }
                rotations += 1;
                let abs_b = b.norm();
                let u = b / Complex::new(abs_b, T::zero());
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                let two = T::from_f64_lossy(2.0);
                let tau = (app - aqq) / (two * abs_b);
                let root = (tau * tau + T::one()).sqrt();
                let t = if tau >= T::zero() {
                    T::one() / (tau + root)
                } else {
                    T::one() / (tau - root)
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                let cs = Complex::new(c, T::zero());
                let su = u * Complex::new(s, T::zero());
                let su_conj = su.conj();

                // Rows of G†·M, written to scratch (contiguous reads).
                for k in 0..n {
                    let apk = m[(p, k)];
                    let aqk = m[(q, k)];
                    scratch_p[k] = cs * apk + su * aqk;
                    scratch_q[k] = -su_conj * apk + cs * aqk;
                }
                // Columns p, q of (G†·M)·G, affecting only four entries.
                let bpp = scratch_p[p];
                let bpq = scratch_p[q];
                let bqp = scratch_q[p];
                let bqq = scratch_q[q];
                scratch_p[p] = Complex::new((bpp * cs + bpq * su_conj).re, T::zero());
                scratch_p[q] = Complex::new(T::zero(), T::zero());
                scratch_q[p] = Complex::new(T::zero(), T::zero());
                scratch_q[q] = Complex::new((-(bqp * su) + bqq * cs).re, T::zero());

                for k in 0..n {
                    m[(p, k)] = scratch_p[k];
                    m[(q, k)] = scratch_q[k];
                }
                for k in 0..n {
                    if k != p && k != q {
                        m[(k, p)] = scratch_p[k].conj();
                        m[(k, q)] = scratch_q[k].conj();
                    }
                }

                if let Some(vt) = vt.as_mut() {
                    for k in 0..n {
                        let vpk = vt[(p, k)];
                        let vqk = vt[(q, k)];
                        vt[(p, k)] = cs * vpk + su_conj * vqk;
                        vt[(q, k)] = -su * vpk + cs * vqk;
                    }
                }
            }
        }
        if rotations == 0 {
            // Every remaining off-diagonal entry is below the skip floor.
            converged = true;
            break;
        }
    }

    if !converged {
        return Err(Error::EigenNonConvergence {
            dim: n,
            sweeps: MAX_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        m[(j, j)]
            .re
            .partial_cmp(&m[(i, i)].re)
            .expect("eigenvalues are finite")
    });

    let values = Array1::from_iter(order.iter().map(|&i| m[(i, i)].re));
    let vt_sorted = vt.map(|vt| {
        Array2::from_shape_fn((n, n), |(i, k)| vt[(order[i], k)])
    });
    Ok((values, vt_sorted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> Array2<Complex<f64>> {
        let g = Array2::from_shape_fn((n, n), |_| {
            c(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
        });
        &g + &adjoint(&g)
    }

    #[test]
    fn eigenvalues_of_identity() {
        let a = identity::<f64>(2);
        let w = hermitian_eigenvalues(&a).unwrap();
        assert!((w[0] - 1.0).abs() < 1e-14);
        assert!((w[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eigenvalues_of_diagonal_sorted_descending() {
        let mut a: Array2<Complex<f64>> = Array2::zeros((2, 2));
        a[(0, 0)] = c(0.25, 0.0);
        a[(1, 1)] = c(0.75, 0.0);
        let w = hermitian_eigenvalues(&a).unwrap();
        assert!((w[0] - 0.75).abs() < 1e-14);
        assert!((w[1] - 0.25).abs() < 1e-14);
    }

    #[test]
    fn pauli_x_spectrum_and_vectors() {
        let mut a: Array2<Complex<f64>> = Array2::zeros((2, 2));
        a[(0, 1)] = c(1.0, 0.0);
        a[(1, 0)] = c(1.0, 0.0);
        let eig = hermitian_eigen(&a).unwrap();
        assert!((eig.values[0] - 1.0).abs() < 1e-14);
        assert!((eig.values[1] + 1.0).abs() < 1e-14);
        // |+1_x> has equal-modulus components of the same relative phase.
        let v0 = eig.vectors.column(0);
        assert!((v0[0].norm() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((v0[0] - v0[1]).norm() < 1e-12);
    }

    #[test]
    fn reconstructs_random_hermitian_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for &n in &[1usize, 2, 3, 5, 16, 33] {
            for _ in 0..5 {
                let a = random_hermitian(n, &mut rng);
                let eig = hermitian_eigen(&a).unwrap();
                let back = from_eigen(&eig.values, &eig.vectors);
                assert!(
                    max_abs_diff(&a, &back) < 1e-12,
                    "reconstruction failed at n = {n}"
                );
                // Vectors unitary: V† V = 1.
                let vdv = adjoint(&eig.vectors).dot(&eig.vectors);
                assert!(max_abs_diff(&vdv, &identity(n)) < 1e-13);
                // Values descending.
                for i in 1..n {
                    assert!(eig.values[i - 1] >= eig.values[i]);
                }
            }
        }
    }

    #[test]
    fn eigenvalues_only_agrees_with_full_decomposition() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = random_hermitian(9, &mut rng);
        let w1 = hermitian_eigenvalues(&a).unwrap();
        let w2 = hermitian_eigen(&a).unwrap().values;
        for i in 0..9 {
            assert!((w1[i] - w2[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_matrix_converges_immediately() {
        let a: Array2<Complex<f64>> = Array2::zeros((4, 4));
        let w = hermitian_eigenvalues(&a).unwrap();
        assert!(w.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn works_in_f32() {
        let mut a: Array2<Complex<f32>> = Array2::zeros((2, 2));
        a[(0, 1)] = Complex::new(1.0f32, 0.0);
        a[(1, 0)] = Complex::new(1.0f32, 0.0);
        let w = hermitian_eigenvalues(&a).unwrap();
        assert!((w[0] - 1.0).abs() < 1e-6);
    }
}
