//! Floating-point scalar abstraction.
//!
//! All core math is generic over the real scalar type; complex quantities are
//! [`num_complex::Complex<T>`]. Concrete `f64` aliases live at the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real scalar usable throughout the crate: `f32`, `f64`, or anything else
/// satisfying the same numeric traits.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Lossy conversion from `f64`, used for literal constants.
    fn from_f64_lossy(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant must convert")
    }
}

impl<T> Scalar for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + NumAssign
        + Sum
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// Shorthand constructor for a complex number.
#[inline]
pub fn c<T: Scalar>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

/// Default numeric tolerances, stated for `f64` and rescaled by machine
/// epsilon for other scalar types so that `f32` instantiations get
/// proportionally looser checks.
pub mod tol {
    use super::Scalar;

    fn scaled<T: Scalar>(f64_value: f64) -> T {
        let ratio = T::epsilon().to_f64().expect("epsilon fits in f64") / f64::EPSILON;
        T::from_f64_lossy(f64_value * ratio)
    }

    /// Hermiticity / unitarity / normalization deviation allowed on inputs.
    pub fn structure<T: Scalar>() -> T {
        scaled(1e-12)
    }

    /// Most negative eigenvalue tolerated on a density matrix; anything in
    /// `[-psd(), 0)` is clamped to zero before matrix functions.
    pub fn psd<T: Scalar>() -> T {
        scaled(1e-10)
    }

    /// Reconstruction error allowed for eigendecompositions and matrix
    /// square roots.
    pub fn reconstruction<T: Scalar>() -> T {
        scaled(1e-10)
    }

    /// Radicand clamp: arguments of outer square roots in `[-radicand(), 0)`
    /// are treated as zero.
    pub fn radicand<T: Scalar>() -> T {
        scaled(1e-12)
    }
}
