//! Quantum correlations of two two-level atoms under spontaneous emission.
//!
//! The crate provides
//!
//! * [`linalg`]: small dense complex matrices, partial trace and transpose,
//!   Hermitian eigenvalues and matrix norms;
//! * [`states`]: the product basis conventions, classical-classical and
//!   classical-quantum state families, Pauli decomposition and samplers;
//! * [`measures`]: geometric discord (closed form and measurement search),
//!   trace-distance discord, maximal mutual correlation, correlation
//!   distance and negativity;
//! * [`dynamics`]: exact two-sided and one-sided emission maps, the master
//!   equation generator and a Runge-Kutta integrator;
//! * [`experiments`]: analytic time curves, peak searches, figure data and
//!   randomized sweeps over classically correlated states.

// Small fixed-size matrix kernels read most clearly with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod dynamics;
pub mod error;
pub mod experiments;
pub mod io;
pub mod linalg;
pub mod measures;
pub mod states;

pub use dynamics::{ChannelKind, EmissionChannel, TimeGrid};
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, RealMatrix3, Subsystem, C64};
pub use measures::{DiscordMethod, DiscordValue, GridSpec, MeasurementChannelResult};
pub use states::{
    BinaryDistribution, BlochVector, DensityMatrix4, JointDistribution2x2, PauliDecomposition,
    ProjectorPair,
};
