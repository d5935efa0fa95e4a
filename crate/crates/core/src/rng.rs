//! Counter-addressed random draws.
//!
//! Sample `i` of a run always reads the same words of one ChaCha8 keystream
//! keyed by the seed, no matter which worker evaluates it or in what order.
//! This is what makes parallel estimates bit-identical to serial ones.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Uniform points in `[-1, 1)^dim`, addressed by sample index.
#[derive(Debug, Clone)]
pub struct PointStream {
    rng: ChaCha8Rng,
    dim: usize,
}

impl PointStream {
    /// Positions the stream at sample `index`.
    pub fn at(seed: u64, dim: usize, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // Each coordinate consumes one u64, i.e. two 32-bit keystream words.
        rng.set_word_pos(u128::from(index) * dim as u128 * 2);
        Self { rng, dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Fills `out` (length `dim`) with the next point.
    pub fn next_point(&mut self, out: &mut [f64]) {
        debug_assert_eq!(out.len(), self.dim);
        for x in out.iter_mut() {
            *x = 2.0 * unit_f64(self.rng.next_u64()) - 1.0;
        }
    }
}

/// Maps 64 random bits to `[0, 1)` using the top 53 bits.
pub fn unit_f64(bits: u64) -> f64 {
    (bits >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}
