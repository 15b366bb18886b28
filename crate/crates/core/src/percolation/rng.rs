//! Counter-based site randomness.
//!
//! Site `i` of the configuration with key `(seed, stream)` owns 32-bit words
//! `2i` and `2i + 1` of the ChaCha8 stream `stream` under `seed`, so any site
//! can be read without generating the ones before it.

use std::collections::hash_map::RandomState;
use std::hash::BuildHasher;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub(crate) fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// The 64 random bits assigned to `site`.
pub fn site_word(seed: u64, stream: u64, site: u64) -> u64 {
    let mut rng = stream_rng(seed, stream);
    rng.set_word_pos(2 * u128::from(site));
    rng.next_u64()
}

/// Random bits of sites `0..n` in order.
pub fn site_words(seed: u64, stream: u64, n: u64) -> Vec<u64> {
    let mut rng = stream_rng(seed, stream);
    (0..n).map(|_| rng.next_u64()).collect()
}

/// Uniform in `[0, 1)` from the top 53 bits.
#[inline]
pub fn uniform_from_word(word: u64) -> f64 {
    (word >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Occupation rule shared by every sampler; monotone in `p` for a fixed word.
#[inline]
pub fn word_below(word: u64, p: f64) -> bool {
    uniform_from_word(word) < p
}

/// A seed drawn from the process's randomly keyed hasher.
pub fn entropy_seed() -> u64 {
    RandomState::new().hash_one(std::time::SystemTime::now())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_access_matches_sequential() {
        let seq = site_words(11, 3, 300);
        for i in [0u64, 1, 7, 8, 31, 32, 33, 127, 128, 299] {
            assert_eq!(site_word(11, 3, i), seq[i as usize]);
        }
    }

    #[test]
    fn streams_differ() {
        assert_ne!(site_words(5, 0, 4), site_words(5, 1, 4));
        assert_ne!(site_words(5, 0, 4), site_words(6, 0, 4));
    }

    #[test]
    fn uniform_range() {
        assert_eq!(uniform_from_word(0), 0.0);
        assert!(uniform_from_word(u64::MAX) < 1.0);
        assert!(word_below(u64::MAX, 1.0));
        assert!(!word_below(0, 0.0));
    }
}
