//! Distance measures between open-quantum-system states as witnesses of
//! initial system-environment correlations.
//!
//! The crate compares how the trace distance, the Bures metric, the Hellinger
//! distance and the Jensen-Shannon divergence respond to initial correlations
//! in two exactly solvable settings:
//!
//! * a qubit dephasing against a single bosonic mode, with the initial total
//!   state superposing the field vacuum and a coherent state
//!   ([`dephasing`]);
//! * a central spin exchanging excitations with a spin bath through a
//!   uniform XY coupling ([`spinstar`]).
//!
//! [`experiments`] adds seeded, reproducible Monte Carlo sweeps over random
//! initial preparations; [`verify`] bundles the oracle cross-checks and
//! property suites behind pass/fail reports.
//!
//! All core math is generic over the real scalar via [`scalar::Scalar`]
//! (`f32` or `f64`); the `*64` aliases below pin the common `f64`
//! instantiation.

pub mod dephasing;
pub mod distance;
pub mod error;
pub mod experiments;
pub mod linalg;
pub mod quantum;
pub mod scalar;
pub mod spinstar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Complex number over a generic real scalar.
pub type Complex<T> = num_complex::Complex<T>;

pub type C64 = num_complex::Complex<f64>;
pub type StateVector64 = quantum::StateVector<f64>;
pub type DensityMatrix64 = quantum::DensityMatrix<f64>;
pub type HermitianOperator64 = quantum::HermitianOperator<f64>;
pub type DephasingParams64 = dephasing::DephasingParams<f64>;
pub type CorrelatedStateSpec64 = dephasing::CorrelatedStateSpec<f64>;
pub type SpinStarParams64 = spinstar::SpinStarParams<f64>;
pub type ExperimentConfig64 = experiments::ExperimentConfig<f64>;
pub type FrequencyCurve64 = experiments::FrequencyCurve<f64>;
pub type TimeTrace64 = experiments::TimeTrace<f64>;
pub type ConcurrenceMap64 = experiments::ConcurrenceMap<f64>;
