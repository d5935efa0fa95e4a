use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChannelError {
    #[error("state ({0}, {1}, {2}) lies outside the Bloch ball")]
    InvalidState(f64, f64, f64),

    /// `lambda3` is within tolerance of 1, so the fixed point is not unique.
    #[error("invariant state undefined: |1 - lambda3| = {0:e} is below tolerance")]
    DegenerateFixedPoint(f64),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VolumeError {
    #[error("regions live on different surfaces: {0} vs {1}")]
    MismatchedSurface(String, String),

    #[error(
        "acceptance rate {rate:e} over {probed} probe draws is below 1e-6; region looks empty"
    )]
    EmptyRegionTimeout { probed: u64, rate: f64 },

    #[error("unknown region name `{0}`")]
    UnknownRegion(String),

    #[error("unknown surface name `{0}`")]
    UnknownSurface(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynamicsError {
    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("quadrature did not reach tolerance {tol:e} on [{a}, {b}] within budget")]
    QuadratureFailure { a: f64, b: f64, tol: f64 },
}
