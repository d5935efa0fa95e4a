//! Rejection sampling of region point clouds.

use rayon::prelude::*;

use super::mc::with_workers;
use super::RegionSpec;
use crate::channel::PhaseCovChannel;
use crate::error::VolumeError;
use crate::rng::PointStream;

const CHUNK: u64 = 4096;

/// Draws examined before declaring a region empty.
pub const PROBE_DRAWS: u64 = 1 << 22;

const MIN_ACCEPTANCE: f64 = 1e-6;

/// `count` points distributed uniformly (flat measure in the free
/// coordinates) over `region`, embedded as channels.
pub fn sample_region(
    region: &RegionSpec,
    count: usize,
    seed: u64,
) -> Result<Vec<PhaseCovChannel>, VolumeError> {
    sample_region_par(region, count, seed, 1)
}

/// Parallel [`sample_region`]. The accepted points are the first `count`
/// hits in sample-index order, so the output does not depend on `workers`.
pub fn sample_region_par(
    region: &RegionSpec,
    count: usize,
    seed: u64,
    workers: usize,
) -> Result<Vec<PhaseCovChannel>, VolumeError> {
    if workers == 0 {
        return Err(VolumeError::InvalidArgument(
            "workers must be at least 1".into(),
        ));
    }
    let dim = region.surface.dimension();
    let accept_chunk = |chunk: u64| {
        let start = chunk * CHUNK;
        let mut stream = PointStream::at(seed, dim, start);
        let mut point = vec![0.0; dim];
        let mut hits = Vec::new();
        for index in start..start + CHUNK {
            stream.next_point(&mut point);
            let c = region.surface.embed(&point);
            if region.base.contains(&c) {
                hits.push((index, c));
            }
        }
        hits
    };

    let batch = (workers as u64 * 4).max(1);
    let mut accepted: Vec<(u64, PhaseCovChannel)> = Vec::with_capacity(count);
    let mut next_chunk = 0u64;
    let mut probed = false;
    while accepted.len() < count {
        let round: Vec<Vec<(u64, PhaseCovChannel)>> = with_workers(workers, || {
            (next_chunk..next_chunk + batch)
                .into_par_iter()
                .map(accept_chunk)
                .collect()
        });
        next_chunk += batch;
        accepted.extend(round.into_iter().flatten());

        let drawn = next_chunk * CHUNK;
        if !probed && drawn >= PROBE_DRAWS && accepted.len() < count {
            probed = true;
            let in_probe = accepted.iter().filter(|(i, _)| *i < PROBE_DRAWS).count();
            let rate = in_probe as f64 / PROBE_DRAWS as f64;
            if rate < MIN_ACCEPTANCE {
                return Err(VolumeError::EmptyRegionTimeout {
                    probed: PROBE_DRAWS,
                    rate,
                });
            }
        }
    }
    accepted.truncate(count);
    Ok(accepted.into_iter().map(|(_, c)| c).collect())
}
