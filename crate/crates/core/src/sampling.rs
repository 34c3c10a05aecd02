//! Genericity as seeded random sampling with majority acceptance.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// How many random trials to run and how many must agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericTrialPolicy {
    pub trials: usize,
    pub accept_threshold: usize,
    pub seed: u64,
}

impl Default for GenericTrialPolicy {
    fn default() -> Self {
        GenericTrialPolicy {
            trials: 5,
            accept_threshold: 4,
            seed: 0,
        }
    }
}

impl GenericTrialPolicy {
    pub fn new(trials: usize, accept_threshold: usize, seed: u64) -> Self {
        assert!(
            accept_threshold <= trials,
            "accept_threshold must not exceed trials"
        );
        GenericTrialPolicy {
            trials,
            accept_threshold,
            seed,
        }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        GenericTrialPolicy { seed, ..self }
    }

    /// Seed for trial `index` of sub-stream `stream`.
    pub fn trial_seed(&self, stream: u64, index: usize) -> u64 {
        derive_seed(self.seed, stream, index as u64)
    }

    pub fn trial_rng(&self, stream: u64, index: usize) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.trial_seed(stream, index))
    }

    /// The value occurring at least `accept_threshold` times, if any.
    pub fn majority<T: PartialEq + Clone>(&self, votes: &[T]) -> Option<T> {
        votes
            .iter()
            .find(|v| votes.iter().filter(|w| w == v).count() >= self.accept_threshold)
            .cloned()
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic, schedule-independent seed derivation.
pub fn derive_seed(seed: u64, stream: u64, index: u64) -> u64 {
    splitmix(splitmix(splitmix(seed) ^ stream) ^ index)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn majority_vote() {
        let p = GenericTrialPolicy::default();
        assert_eq!(p.majority(&[1, 1, 2, 1, 1]), Some(1));
        assert_eq!(p.majority(&[1, 1, 2, 2, 1]), None);
    }

    #[test]
    fn derived_seeds_differ() {
        let p = GenericTrialPolicy::default();
        let seeds: Vec<u64> = (0..5).map(|i| p.trial_seed(0, i)).collect();
        let mut dedup = seeds.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 5);
        assert_ne!(p.trial_seed(1, 0), p.trial_seed(0, 0));
    }

    #[test]
    #[should_panic]
    fn threshold_above_trials_panics() {
        GenericTrialPolicy::new(3, 4, 0);
    }
}
