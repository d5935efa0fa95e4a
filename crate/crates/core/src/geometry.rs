//! Hilbert-Schmidt geometry on the space of phase-covariant Choi states.
//!
//! The line element `ds² = Tr(dρ²)` is diagonal in `(λ₁, λ₃, λ★)` with
//! constant coefficients, so every (hyper)surface studied here carries a
//! constant volume density `√det g`. Volumes are therefore density times
//! the flat (Lebesgue) measure of a region in the free coordinates.
//!
//! The unital density is not printed alongside the others; restricting the
//! full line element to `λ★ = 0` leaves `diag(½, ¼)` on `(λ₁, λ₃)`, hence
//! `√2/4`. The full-space volume element is written over `dλ₁dλ₃dλ★`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::channel::PhaseCovChannel;
use crate::error::VolumeError;

/// A free coordinate on a hypersurface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Coordinate {
    Lambda1,
    Lambda3,
    LambdaStar,
    /// Shared value on the fully symmetric line `λ₁ = λ₃ = λ★`.
    Lambda,
}

impl Coordinate {
    pub fn name(self) -> &'static str {
        match self {
            Coordinate::Lambda1 => "lambda1",
            Coordinate::Lambda3 => "lambda3",
            Coordinate::LambdaStar => "lambdaStar",
            Coordinate::Lambda => "lambda",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Hypersurface {
    Full3D,
    /// `λ★ = 0`
    Unital,
    /// `λ₁ = λ₃`
    Isotropic,
    /// `λ₁ = λ₃ = λ★`
    FullySymmetric,
    /// `λ₁ = 0`
    NonInvertibleL1,
    /// `λ₃ = 0`
    NonInvertibleL3,
}

impl Hypersurface {
    pub const ALL: [Hypersurface; 6] = [
        Hypersurface::Full3D,
        Hypersurface::Unital,
        Hypersurface::Isotropic,
        Hypersurface::FullySymmetric,
        Hypersurface::NonInvertibleL1,
        Hypersurface::NonInvertibleL3,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Hypersurface::Full3D => "full",
            Hypersurface::Unital => "unital",
            Hypersurface::Isotropic => "iso",
            Hypersurface::FullySymmetric => "sym1d",
            Hypersurface::NonInvertibleL1 => "l1zero",
            Hypersurface::NonInvertibleL3 => "l3zero",
        }
    }

    pub fn coordinates(self) -> &'static [Coordinate] {
        use Coordinate::*;
        match self {
            Hypersurface::Full3D => &[Lambda1, Lambda3, LambdaStar],
            Hypersurface::Unital => &[Lambda1, Lambda3],
            Hypersurface::Isotropic => &[Lambda3, LambdaStar],
            Hypersurface::FullySymmetric => &[Lambda],
            Hypersurface::NonInvertibleL1 => &[Lambda3, LambdaStar],
            Hypersurface::NonInvertibleL3 => &[Lambda1, LambdaStar],
        }
    }

    pub fn dimension(self) -> usize {
        self.coordinates().len()
    }

    /// Maps free coordinates (in the order of [`Self::coordinates`]) to the
    /// channel they parameterize.
    ///
    /// Panics if `point` has the wrong length.
    pub fn embed(self, point: &[f64]) -> PhaseCovChannel {
        assert_eq!(point.len(), self.dimension(), "wrong number of coordinates");
        match self {
            Hypersurface::Full3D => PhaseCovChannel::new(point[0], point[1], point[2]),
            Hypersurface::Unital => PhaseCovChannel::new(point[0], point[1], 0.0),
            Hypersurface::Isotropic => PhaseCovChannel::new(point[0], point[0], point[1]),
            Hypersurface::FullySymmetric => PhaseCovChannel::new(point[0], point[0], point[0]),
            Hypersurface::NonInvertibleL1 => PhaseCovChannel::new(0.0, point[0], point[1]),
            Hypersurface::NonInvertibleL3 => PhaseCovChannel::new(point[0], 0.0, point[1]),
        }
    }

    /// Whether `channel` lies on this surface (exact comparison).
    pub fn contains(self, channel: &PhaseCovChannel) -> bool {
        let PhaseCovChannel {
            lambda1,
            lambda3,
            lambda_star,
        } = *channel;
        match self {
            Hypersurface::Full3D => true,
            Hypersurface::Unital => lambda_star == 0.0,
            Hypersurface::Isotropic => lambda1 == lambda3,
            Hypersurface::FullySymmetric => lambda1 == lambda3 && lambda3 == lambda_star,
            Hypersurface::NonInvertibleL1 => lambda1 == 0.0,
            Hypersurface::NonInvertibleL3 => lambda3 == 0.0,
        }
    }

    /// Diagonal metric coefficients `g_ii`, one per free coordinate.
    pub fn line_element_coefficients(self) -> LineElement {
        let values: &[f64] = match self {
            Hypersurface::Full3D => &[0.5, 0.25, 0.25],
            Hypersurface::Unital => &[0.5, 0.25],
            Hypersurface::Isotropic => &[0.75, 0.25],
            Hypersurface::FullySymmetric => &[1.0],
            Hypersurface::NonInvertibleL1 => &[0.25, 0.25],
            Hypersurface::NonInvertibleL3 => &[0.5, 0.25],
        };
        LineElement {
            terms: self
                .coordinates()
                .iter()
                .copied()
                .zip(values.iter().copied())
                .collect(),
        }
    }

    /// `√det g` on this surface.
    pub fn measure_density(self) -> MeasureDensity {
        let sqrt2 = std::f64::consts::SQRT_2;
        MeasureDensity(match self {
            Hypersurface::Full3D => sqrt2 / 8.0,
            Hypersurface::Unital => sqrt2 / 4.0,
            Hypersurface::Isotropic => 3f64.sqrt() / 4.0,
            Hypersurface::FullySymmetric => 1.0,
            Hypersurface::NonInvertibleL1 => 0.25,
            Hypersurface::NonInvertibleL3 => sqrt2 / 4.0,
        })
    }
}

impl fmt::Display for Hypersurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Hypersurface {
    type Err = VolumeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Hypersurface::ALL
            .into_iter()
            .find(|h| h.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| VolumeError::UnknownSurface(s.to_string()))
    }
}

/// `ds² = Σ g_ii dx_i²`.
#[derive(Debug, Clone, PartialEq)]
pub struct LineElement {
    pub terms: Vec<(Coordinate, f64)>,
}

impl LineElement {
    pub fn coefficients(&self) -> Vec<f64> {
        self.terms.iter().map(|(_, g)| *g).collect()
    }

    pub fn determinant(&self) -> f64 {
        self.terms.iter().map(|(_, g)| *g).product()
    }
}

impl fmt::Display for LineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ds^2 =")?;
        for (i, (c, g)) in self.terms.iter().enumerate() {
            let sep = if i == 0 { " " } else { " + " };
            write!(f, "{sep}{g} d{}^2", c.name())?;
        }
        Ok(())
    }
}

/// Constant volume density `√det g` of a surface.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct MeasureDensity(f64);

impl MeasureDensity {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Density of the Pauli-channel volume element `dV = ⅛ dλ₁dλ₂dλ₃`.
pub fn pauli_measure_density() -> MeasureDensity {
    MeasureDensity(0.125)
}

/// Pauli-channel line element `ds² = ¼(dλ₁² + dλ₂² + dλ₃²)` on `(λ₁, λ₂, λ₃)`.
pub fn pauli_line_element_coefficients() -> [f64; 3] {
    [0.25, 0.25, 0.25]
}
