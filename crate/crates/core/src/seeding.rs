//! Seed derivation for repeated and sharded randomized runs.
//!
//! Derived seeds are produced by xoring context into the base seed and
//! scrambling with the splitmix64 finalizer, so repetitions are
//! reproducible and decorrelated.

use crate::minhash::canonical_encode;

/// splitmix64 finalizer (Steele, Lea, Flood 2014).
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// Seed for repetition `index` of a run with base `seed`.
pub fn rep_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ index)
}

/// Seed for a tagged stream (e.g. one document's sampler) within a
/// repetition: seed, tag and repetition are mixed in sequence.
pub fn tagged_seed(seed: u64, tag: &str, index: u64) -> u64 {
    splitmix64(splitmix64(seed ^ canonical_encode(tag)) ^ index)
}
