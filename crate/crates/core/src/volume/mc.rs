//! Hit-or-miss Monte Carlo over the `[-1, 1]^d` box.
//!
//! Samples are split into fixed-size chunks of consecutive indices; each
//! chunk reads its points from the counter-addressed stream and returns
//! integer hit counts. Chunk layout never depends on the worker count and
//! integer sums are order-independent, so results are bit-identical for any
//! number of workers.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Measure, RegionSpec};
use crate::channel::PhaseCovChannel;
use crate::error::VolumeError;
use crate::geometry::Hypersurface;
use crate::rng::PointStream;

const CHUNK: u64 = 1 << 16;

/// Two-sided 99% normal quantile.
pub const Z_99: f64 = 2.575_829_303_548_900_4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VolumeEstimate {
    /// Hilbert-Schmidt volume.
    pub mean: f64,
    #[serde(rename = "stdError")]
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
    pub hits: u64,
    pub box_volume: f64,
    pub density: f64,
}

impl VolumeEstimate {
    fn from_hits(hits: u64, samples: u64, seed: u64, box_volume: f64, density: f64) -> Self {
        let p = hits as f64 / samples as f64;
        let scale = box_volume * density;
        Self {
            mean: p * scale,
            std_error: (p * (1.0 - p) / samples as f64).sqrt() * scale,
            samples,
            seed,
            hits,
            box_volume,
            density,
        }
    }

    pub fn hit_fraction(&self) -> f64 {
        self.hits as f64 / self.samples as f64
    }

    /// `(mean, std_error)` in the requested measure.
    pub fn in_measure(&self, measure: Measure) -> (f64, f64) {
        match measure {
            Measure::HilbertSchmidt => (self.mean, self.std_error),
            Measure::Lebesgue => (self.mean / self.density, self.std_error / self.density),
        }
    }

    /// 99% normal-approximation confidence interval (Hilbert-Schmidt).
    pub fn ci99(&self) -> (f64, f64) {
        (
            self.mean - Z_99 * self.std_error,
            self.mean + Z_99 * self.std_error,
        )
    }

    /// `(mean - target) / std_error` in `measure`.
    pub fn deviation_sigma(&self, target: f64, measure: Measure) -> f64 {
        let (mean, se) = self.in_measure(measure);
        sigma(mean - target, se)
    }
}

pub(crate) fn sigma(diff: f64, se: f64) -> f64 {
    if se > 0.0 {
        diff / se
    } else if diff == 0.0 {
        0.0
    } else {
        diff.signum() * f64::INFINITY
    }
}

/// Estimate of `V(num)/V(den)` from one shared sample stream.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioEstimate {
    pub ratio: f64,
    #[serde(rename = "stdError")]
    pub std_error: f64,
    pub num_hits: u64,
    pub den_hits: u64,
    pub both_hits: u64,
    pub samples: u64,
    pub seed: u64,
}

impl RatioEstimate {
    pub fn deviation_sigma(&self, target: f64) -> f64 {
        sigma(self.ratio - target, self.std_error)
    }
}

fn check_args(samples: u64, workers: usize) -> Result<(), VolumeError> {
    if samples == 0 {
        return Err(VolumeError::InvalidArgument(
            "samples must be at least 1".into(),
        ));
    }
    if workers == 0 {
        return Err(VolumeError::InvalidArgument(
            "workers must be at least 1".into(),
        ));
    }
    Ok(())
}

pub(crate) fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Classifies `samples` uniform points of the surface box into `cells`
/// bins and returns the per-bin counts. `classify` must return an index
/// below `cells`.
pub fn mc_counts<F>(
    surface: Hypersurface,
    samples: u64,
    seed: u64,
    workers: usize,
    cells: usize,
    classify: F,
) -> Result<Vec<u64>, VolumeError>
where
    F: Fn(&PhaseCovChannel) -> usize + Sync,
{
    check_args(samples, workers)?;
    let dim = surface.dimension();
    let chunks = samples.div_ceil(CHUNK);
    let count_chunk = |chunk: u64| {
        let start = chunk * CHUNK;
        let end = (start + CHUNK).min(samples);
        let mut stream = PointStream::at(seed, dim, start);
        let mut point = vec![0.0; dim];
        let mut counts = vec![0u64; cells];
        for _ in start..end {
            stream.next_point(&mut point);
            counts[classify(&surface.embed(&point))] += 1;
        }
        counts
    };
    let add = |mut a: Vec<u64>, b: Vec<u64>| {
        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        a
    };
    Ok(with_workers(workers, || {
        (0..chunks)
            .into_par_iter()
            .map(count_chunk)
            .reduce(|| vec![0u64; cells], add)
    }))
}

pub fn mc_volume(
    region: &RegionSpec,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<VolumeEstimate, VolumeError> {
    let base = region.base;
    let counts = mc_counts(region.surface, samples, seed, workers, 2, |c| {
        usize::from(base.contains(c))
    })?;
    Ok(VolumeEstimate::from_hits(
        counts[1],
        samples,
        seed,
        region.bounding_box().volume(),
        region.surface.measure_density().value(),
    ))
}

/// Ratio of two region volumes on the same surface, with a delta-method
/// standard error that accounts for the overlap of the two regions.
pub fn mc_ratio(
    num: &RegionSpec,
    den: &RegionSpec,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<RatioEstimate, VolumeError> {
    if num.surface != den.surface {
        return Err(VolumeError::MismatchedSurface(
            num.surface.to_string(),
            den.surface.to_string(),
        ));
    }
    let (a, b) = (num.base, den.base);
    let counts = mc_counts(num.surface, samples, seed, workers, 4, |c| {
        usize::from(a.contains(c)) | (usize::from(b.contains(c)) << 1)
    })?;
    let num_hits = counts[1] + counts[3];
    let den_hits = counts[2] + counts[3];
    let both_hits = counts[3];
    let n = samples as f64;
    let (pa, pb, pab) = (
        num_hits as f64 / n,
        den_hits as f64 / n,
        both_hits as f64 / n,
    );
    let (ratio, std_error) = if den_hits == 0 {
        (f64::NAN, f64::NAN)
    } else {
        let r = pa / pb;
        let var = (pa * (1.0 - pa) / (pb * pb) + r * r * (1.0 - pb) / pb
            - 2.0 * r * (pab - pa * pb) / (pb * pb))
            / n;
        (r, var.max(0.0).sqrt())
    };
    Ok(RatioEstimate {
        ratio,
        std_error,
        num_hits,
        den_hits,
        both_hits,
        samples,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::volume::BaseRegion;
    use std::f64::consts::SQRT_2;

    #[test]
    fn worker_count_does_not_change_result() {
        let r = RegionSpec::new(BaseRegion::Cpt, Hypersurface::Full3D);
        let one = mc_volume(&r, 300_001, 11, 1).unwrap();
        for w in [2, 3, 8] {
            assert_eq!(mc_volume(&r, 300_001, 11, w).unwrap(), one);
        }
    }

    #[test]
    fn pt_volume_is_close() {
        let r = RegionSpec::new(BaseRegion::Pt, Hypersurface::Full3D);
        let est = mc_volume(&r, 1_000_000, 5, 4).unwrap();
        assert!(
            est.deviation_sigma(SQRT_2 / 2.0, Measure::HilbertSchmidt)
                .abs()
                < 4.0
        );
        let (lo, hi) = est.ci99();
        assert!(lo < est.mean && est.mean < hi);
        assert_eq!(est.samples, 1_000_000);
        assert_eq!(est.box_volume, 8.0);
    }

    #[test]
    fn std_error_formula() {
        let est = VolumeEstimate::from_hits(250, 1000, 0, 4.0, 0.25);
        let p: f64 = 0.25;
        assert!((est.std_error - (p * (1.0 - p) / 1000.0).sqrt()).abs() < 1e-16);
        assert_eq!(est.mean, 0.25);
        assert_eq!(est.in_measure(Measure::Lebesgue).0, 1.0);
    }

    #[test]
    fn nested_ratio_error_reduces_to_conditional_binomial() {
        let full = |b| RegionSpec::new(b, Hypersurface::Full3D);
        let est = mc_ratio(
            &full(BaseRegion::Ebc),
            &full(BaseRegion::Cpt),
            200_000,
            3,
            2,
        )
        .unwrap();
        assert_eq!(est.num_hits, est.both_hits);
        let r = est.ratio;
        let conditional = (r * (1.0 - r) / est.den_hits as f64).sqrt();
        assert!((est.std_error - conditional).abs() < 1e-12 * conditional.max(1e-300) + 1e-15);
    }

    #[test]
    fn rejects_bad_arguments() {
        let r = RegionSpec::new(BaseRegion::Pt, Hypersurface::Full3D);
        assert!(mc_volume(&r, 0, 1, 1).is_err());
        assert!(mc_volume(&r, 10, 1, 0).is_err());
    }
}
