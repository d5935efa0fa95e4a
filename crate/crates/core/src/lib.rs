//! Geometry of phase-covariant qubit channels.
//!
//! A phase-covariant qubit map is fixed by three real numbers: the doubly
//! degenerate eigenvalue `lambda1`, the eigenvalue `lambda3` and the
//! non-unitality parameter `lambda_star`. This crate provides
//!
//! - [`channel`]: the map's action on states and operators, its Choi matrix
//!   with closed-form spectrum, and membership predicates for positive,
//!   completely positive, entanglement-breaking and time-local-generated maps;
//! - [`geometry`]: Hilbert-Schmidt line elements and the constant volume
//!   densities on the full parameter space and on its hypersurfaces;
//! - [`volume`]: integration regions, closed-form volumes and ratios, and a
//!   deterministic parallel hit-or-miss Monte Carlo estimator that checks them;
//! - [`dynamics`]: channel trajectories generated by time-local generators
//!   with time-dependent decay rates;
//! - [`io`]: CSV/JSON output shared by the command-line front end.

#![forbid(unsafe_code)]

pub mod channel;
pub mod dynamics;
pub mod error;
pub mod geometry;
pub mod io;
pub mod rng;
pub mod volume;

pub use channel::{ChoiMatrix, ChoiSpectrum, PhaseCovChannel, QubitState};
pub use dynamics::{RateSchedule, Trajectory};
pub use error::{ChannelError, DynamicsError, VolumeError};
pub use geometry::{Hypersurface, MeasureDensity};
pub use volume::{BaseRegion, Measure, RegionSpec, VolumeEstimate};

/// Seed used whenever the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;
