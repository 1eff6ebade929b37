//! Deterministic randomness.
//!
//! Every stochastic routine in this crate draws from a [`ChaCha8Rng`] stream
//! owned by the caller. Parallel work never shares a stream: trial `i` of a
//! run derives its own substream from the master seed by counter mixing, so
//! results are bit-identical for any thread count and any scheduling order.
//!
//! Substream derivation uses the SplitMix64 finalizer. It is bijective on
//! `u64`, which makes substream seeds injective in the trial index for a
//! fixed master seed.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Master seed for a reproducible run.
///
/// The same master seed and trial index always produce the same substream,
/// independent of execution order or parallelism degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed(u64);

impl Seed {
    pub fn new(master: u64) -> Self {
        Seed(master)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// Derive the substream seed for one unit of parallel work.
    ///
    /// Pure in `(self, trial_index)` and injective in `trial_index`:
    /// `mix64` is a bijection, so distinct indices cannot collide under a
    /// fixed master.
    pub fn substream(self, trial_index: u64) -> Seed {
        Seed(mix64(self.0 ^ mix64(trial_index)))
    }

    /// Fresh generator positioned at the start of this seed's stream.
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

impl From<u64> for Seed {
    fn from(master: u64) -> Self {
        Seed::new(master)
    }
}

/// SplitMix64 step: add the golden-ratio increment, then finalize.
/// Bijective on `u64`.
fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
