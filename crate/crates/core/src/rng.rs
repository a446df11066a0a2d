//! Seeded random stream shared by the noise channel and the annealer.
//!
//! The generator is ChaCha with 8 rounds (`rand_chacha::ChaCha8Rng`), seeded
//! with `seed_from_u64`. A uniform draw consumes one `u64` and keeps its top
//! 53 bits: `u = (r >> 11) * 2^-53`, so `u` lies in `[0, 1)`. Both the
//! generator's output stream and this conversion are fixed, so a seed gives
//! the same draws on every platform and build.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct UnitStream {
    rng: ChaCha8Rng,
}

impl UnitStream {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Next uniform sample in `[0, 1)`.
    #[inline]
    pub fn next_unit(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        (self.rng.next_u64() >> 11) as f64 * SCALE
    }
}
