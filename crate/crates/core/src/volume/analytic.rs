//! Closed-form volumes and volume ratios.
//!
//! All values on a surface share one measure: Hilbert-Schmidt everywhere
//! except `λ₃ = 0`, whose printed values (4 and π/2) are flat areas in
//! `(λ₁, λ★)`. Entries that are not printed as numbers but follow from
//! elementary polygon areas, or from exact statements about equal-sized
//! cells, are tagged [`Origin::Derived`].

use std::f64::consts::{PI, SQRT_2};

use serde::{Deserialize, Serialize};

use super::{BaseRegion, Measure, RegionSpec};
use crate::error::VolumeError;
use crate::geometry::Hypersurface;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// Printed value, or a printed volume times printed ratios.
    Published,
    /// Elementary area/length not printed as a number.
    Derived,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnalyticVolume {
    pub value: f64,
    pub measure: Measure,
    pub origin: Origin,
}

impl AnalyticVolume {
    fn published(value: f64, measure: Measure) -> Self {
        Self {
            value,
            measure,
            origin: Origin::Published,
        }
    }

    fn derived(value: f64, measure: Measure) -> Self {
        Self {
            value,
            measure,
            origin: Origin::Derived,
        }
    }

    /// The same volume expressed in `target` on `surface`.
    pub fn in_measure(&self, surface: Hypersurface, target: Measure) -> f64 {
        let rho = surface.measure_density().value();
        match (self.measure, target) {
            (a, b) if a == b => self.value,
            (Measure::Lebesgue, Measure::HilbertSchmidt) => self.value * rho,
            (Measure::HilbertSchmidt, Measure::Lebesgue) => self.value / rho,
            _ => unreachable!(),
        }
    }
}

/// `(√5 − 1)/4`, the EBC/CPT edge on the fully symmetric line.
fn golden_edge() -> f64 {
    (5f64.sqrt() - 1.0) / 4.0
}

/// Measure in which the catalog states volumes on `surface`.
pub fn catalog_measure(surface: Hypersurface) -> Measure {
    match surface {
        Hypersurface::NonInvertibleL3 => Measure::Lebesgue,
        _ => Measure::HilbertSchmidt,
    }
}

/// Interval of `λ` occupied by `base` on the fully symmetric line.
pub fn fully_symmetric_interval(base: BaseRegion) -> Option<(f64, f64)> {
    let g = golden_edge();
    match base {
        BaseRegion::Pt => Some((-0.5, 0.5)),
        BaseRegion::Cpt => Some((-g, 0.5)),
        BaseRegion::Ebc => Some((-g, g)),
        BaseRegion::PtTlg | BaseRegion::CptTlg => Some((0.0, 0.5)),
        BaseRegion::EbcTlg => Some((0.0, g)),
        BaseRegion::Tlg => None,
    }
}

/// Published ratio `V(num)/V(den)`, when printed.
fn published_ratio(num: BaseRegion, den: BaseRegion, surface: Hypersurface) -> Option<f64> {
    use BaseRegion::*;
    let r3 = 3f64.sqrt();
    match (surface, num, den) {
        (Hypersurface::Full3D, Cpt, Pt) => Some(4.0 / 9.0),
        (Hypersurface::Full3D, PtTlg, Pt) => Some(0.25),
        (Hypersurface::Full3D, CptTlg, Cpt) => Some(0.5 - 3.0 * PI / 64.0),
        (Hypersurface::Full3D, Ebc, Cpt) => Some(3.0 * PI / 16.0),
        (Hypersurface::Full3D, EbcTlg, CptTlg) => Some(3.0 * PI / (32.0 - 3.0 * PI)),
        (Hypersurface::Full3D, EbcTlg, Ebc) => Some(0.25),
        (Hypersurface::Isotropic, Cpt, Pt) => Some((9.0 + 2.0 * PI * r3) / 27.0),
        (Hypersurface::Isotropic, Ebc, Cpt) => Some((4.0 * PI * r3 - 9.0) / (2.0 * PI * r3 + 9.0)),
        _ => None,
    }
}

/// Closed-form volume of `region`, or `None` where only Monte Carlo is
/// available (TLG alone on every surface).
pub fn analytic_volume(region: &RegionSpec) -> Option<AnalyticVolume> {
    use AnalyticVolume as V;
    use BaseRegion::*;
    let hs = Measure::HilbertSchmidt;
    let surface = region.surface;
    let ratio = |n, d| published_ratio(n, d, surface).expect("catalog ratio");
    match surface {
        Hypersurface::Full3D => {
            let pt = SQRT_2 / 2.0;
            let cpt = 2.0 * SQRT_2 / 9.0;
            let ebc = ratio(Ebc, Cpt) * cpt;
            match region.base {
                Pt => Some(V::published(pt, hs)),
                Cpt => Some(V::published(cpt, hs)),
                Ebc => Some(V::published(ebc, hs)),
                PtTlg => Some(V::published(ratio(PtTlg, Pt) * pt, hs)),
                CptTlg => Some(V::published(ratio(CptTlg, Cpt) * cpt, hs)),
                EbcTlg => Some(V::published(ratio(EbcTlg, Ebc) * ebc, hs)),
                Tlg => None,
            }
        }
        Hypersurface::Isotropic => {
            // PT is the diamond |λ| + |λ★| ≤ 1 of area 2.
            let rho = surface.measure_density().value();
            let pt = 2.0 * rho;
            let cpt = ratio(Cpt, Pt) * pt;
            let ebc = ratio(Ebc, Cpt) * cpt;
            // Half of EBC needs memory kernels, and (CPT∩TLG)\EBC has the
            // size of PT\CPT.
            let ebc_tlg = 0.5 * ebc;
            match region.base {
                Pt => Some(V::derived(pt, hs)),
                Cpt => Some(V::published(cpt, hs)),
                Ebc => Some(V::published(ebc, hs)),
                PtTlg => Some(V::derived(0.5 * pt, hs)),
                CptTlg => Some(V::published(ebc_tlg + (pt - cpt), hs)),
                EbcTlg => Some(V::published(ebc_tlg, hs)),
                Tlg => None,
            }
        }
        Hypersurface::FullySymmetric => {
            let (a, b) = fully_symmetric_interval(region.base)?;
            Some(V::published(b - a, hs))
        }
        Hypersurface::NonInvertibleL1 => {
            // PT = CPT = EBC is the diamond |λ₃| + |λ★| ≤ 1; TLG needs λ₁ > 0.
            let rho = surface.measure_density().value();
            match region.base {
                Pt | Cpt | Ebc => Some(V::derived(2.0 * rho, hs)),
                PtTlg | CptTlg | EbcTlg => Some(V::derived(0.0, hs)),
                Tlg => None,
            }
        }
        Hypersurface::NonInvertibleL3 => {
            let flat = Measure::Lebesgue;
            match region.base {
                Pt => Some(V::published(4.0, flat)),
                // Ellipse 4λ₁² + λ★² ≤ 1 with semi-axes ½ and 1.
                Cpt | Ebc => Some(V::published(PI / 2.0, flat)),
                PtTlg | CptTlg | EbcTlg => Some(V::derived(0.0, flat)),
                Tlg => None,
            }
        }
        Hypersurface::Unital => {
            // Square, triangle |λ₁| ≤ (1+λ₃)/2 and rhombus |λ₁| ≤ (1−|λ₃|)/2.
            let rho = surface.measure_density().value();
            let area = match region.base {
                Pt => 4.0,
                Cpt => 2.0,
                Ebc => 1.0,
                PtTlg => 1.0,
                CptTlg => 0.75,
                EbcTlg => 0.25,
                Tlg => return None,
            };
            Some(V::derived(area * rho, hs))
        }
    }
}

/// `V(num)/V(den)`. Printed ratios are returned as printed; otherwise the
/// ratio of catalog volumes is used when both exist.
pub fn analytic_ratio(num: &RegionSpec, den: &RegionSpec) -> Result<Option<f64>, VolumeError> {
    if num.surface != den.surface {
        return Err(VolumeError::MismatchedSurface(
            num.surface.to_string(),
            den.surface.to_string(),
        ));
    }
    if let Some(r) = published_ratio(num.base, den.base, num.surface) {
        return Ok(Some(r));
    }
    match (analytic_volume(num), analytic_volume(den)) {
        (Some(a), Some(b)) if b.value > 0.0 => Ok(Some(a.value / b.value)),
        _ => Ok(None),
    }
}
