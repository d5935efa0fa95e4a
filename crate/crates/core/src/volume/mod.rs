//! Integration regions, closed-form volumes and their Monte Carlo check.
//!
//! A [`RegionSpec`] pairs a base class of maps (PT, CPT, EBC, TLG or an
//! intersection with TLG) with a [`Hypersurface`]. Every region lies in the
//! box `[-1, 1]^d` of free coordinates, which is also the sampling domain of
//! the hit-or-miss estimator.

mod analytic;
mod mc;
mod report;
mod sample;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use analytic::{
    analytic_ratio, analytic_volume, catalog_measure, fully_symmetric_interval, AnalyticVolume,
    Origin,
};
pub use mc::{mc_counts, mc_ratio, mc_volume, RatioEstimate, VolumeEstimate, Z_99};
pub use report::{summary_report, Report, ReportRow, RowKind};
pub use sample::{sample_region, sample_region_par, PROBE_DRAWS};

use crate::channel::PhaseCovChannel;
use crate::error::VolumeError;
use crate::geometry::Hypersurface;

/// Which measure a volume is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    /// Hilbert-Schmidt volume: flat measure times the surface density.
    HilbertSchmidt,
    /// Flat measure `dx₁…dx_d` in the free coordinates.
    Lebesgue,
}

impl Measure {
    pub fn name(self) -> &'static str {
        match self {
            Measure::HilbertSchmidt => "hilbert_schmidt",
            Measure::Lebesgue => "lebesgue",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseRegion {
    Pt,
    Cpt,
    Ebc,
    Tlg,
    PtTlg,
    CptTlg,
    EbcTlg,
}

impl BaseRegion {
    pub const ALL: [BaseRegion; 7] = [
        BaseRegion::Pt,
        BaseRegion::Cpt,
        BaseRegion::Ebc,
        BaseRegion::Tlg,
        BaseRegion::PtTlg,
        BaseRegion::CptTlg,
        BaseRegion::EbcTlg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BaseRegion::Pt => "PT",
            BaseRegion::Cpt => "CPT",
            BaseRegion::Ebc => "EBC",
            BaseRegion::Tlg => "TLG",
            BaseRegion::PtTlg => "PTxTLG",
            BaseRegion::CptTlg => "CPTxTLG",
            BaseRegion::EbcTlg => "EBCxTLG",
        }
    }

    /// Exact membership (closed PT/CPT/EBC, strict TLG). TLG alone is
    /// unbounded in `λ₁, λ₃` and is clipped to the `[-1, 1]` box.
    pub fn contains(self, c: &PhaseCovChannel) -> bool {
        let tlg = || c.is_tlg() && c.lambda1 <= 1.0 && c.lambda3 <= 1.0;
        match self {
            BaseRegion::Pt => c.in_positivity_region(0.0),
            BaseRegion::Cpt => c.is_cpt(0.0),
            BaseRegion::Ebc => c.is_ebc(0.0),
            BaseRegion::Tlg => tlg(),
            BaseRegion::PtTlg => c.in_positivity_region(0.0) && c.is_tlg(),
            BaseRegion::CptTlg => c.is_cpt(0.0) && c.is_tlg(),
            BaseRegion::EbcTlg => c.is_ebc(0.0) && c.is_tlg(),
        }
    }
}

impl fmt::Display for BaseRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BaseRegion {
    type Err = VolumeError;

    /// Accepts `PTxTLG` style names, case-insensitively, and `∩` in place
    /// of `x`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.replace('∩', "x").to_ascii_uppercase();
        BaseRegion::ALL
            .into_iter()
            .find(|r| r.name().to_ascii_uppercase() == norm)
            .ok_or_else(|| VolumeError::UnknownRegion(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegionSpec {
    pub base: BaseRegion,
    pub surface: Hypersurface,
}

impl RegionSpec {
    pub const fn new(base: BaseRegion, surface: Hypersurface) -> Self {
        Self { base, surface }
    }

    /// Membership of a point given in the surface's free coordinates.
    pub fn contains_point(&self, point: &[f64]) -> bool {
        self.base.contains(&self.surface.embed(point))
    }

    pub fn contains_channel(&self, c: &PhaseCovChannel) -> bool {
        self.surface.contains(c) && self.base.contains(c)
    }

    pub fn bounding_box(&self) -> BoundingBox {
        BoundingBox::unit(self.surface.dimension())
    }
}

impl fmt::Display for RegionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.base, self.surface)
    }
}

/// Axis-aligned box of closed intervals, one per free coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundingBox {
    pub intervals: Vec<(f64, f64)>,
}

impl BoundingBox {
    /// `[-1, 1]^dim`, which contains every region on every surface.
    pub fn unit(dim: usize) -> Self {
        Self {
            intervals: vec![(-1.0, 1.0); dim],
        }
    }

    pub fn volume(&self) -> f64 {
        self.intervals.iter().map(|(a, b)| b - a).product()
    }

    pub fn contains(&self, point: &[f64]) -> bool {
        point.len() == self.intervals.len()
            && point
                .iter()
                .zip(&self.intervals)
                .all(|(x, (a, b))| (*a..=*b).contains(x))
    }
}
