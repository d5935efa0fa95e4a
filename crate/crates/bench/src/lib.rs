//! Shared fixtures for the criterion benches.

use phasecov_core::{BaseRegion, Hypersurface, PhaseCovChannel, RegionSpec};

/// Regions exercised by the Monte Carlo benches.
pub fn bench_regions() -> Vec<RegionSpec> {
    vec![
        RegionSpec::new(BaseRegion::Pt, Hypersurface::Full3D),
        RegionSpec::new(BaseRegion::Cpt, Hypersurface::Full3D),
        RegionSpec::new(BaseRegion::EbcTlg, Hypersurface::Full3D),
        RegionSpec::new(BaseRegion::Ebc, Hypersurface::Isotropic),
    ]
}

/// Deterministic spread of channels over `[-1, 1]^3`.
pub fn channel_grid(per_axis: usize) -> Vec<PhaseCovChannel> {
    let step = 2.0 / (per_axis.max(2) - 1) as f64;
    let axis = |i: usize| -1.0 + step * i as f64;
    let mut v = Vec::with_capacity(per_axis.pow(3));
    for i in 0..per_axis {
        for j in 0..per_axis {
            for k in 0..per_axis {
                v.push(PhaseCovChannel::new(axis(i), axis(j), axis(k)));
            }
        }
    }
    v
}
