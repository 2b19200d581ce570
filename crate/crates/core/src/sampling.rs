//! Glivenko-Cantelli estimation: exact similarity computed on random
//! subsamples of the two shingle sequences, repeated and averaged.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::seeding::tagged_seed;
use crate::shingling::ShingleSequence;
use crate::similarity_exact::multiplicity_oracle;
use crate::stats::RepeatedEstimate;

/// Subsample size, repetition count and seed of a GC run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsampleSpec {
    pub ng: usize,
    pub reps: usize,
    pub seed: u64,
}

impl SubsampleSpec {
    pub fn new(ng: usize, reps: usize, seed: u64) -> Result<Self> {
        if ng == 0 {
            return Err(Error::parameter("subsample size ng must be >= 1"));
        }
        if reps == 0 {
            return Err(Error::parameter("reps must be >= 1"));
        }
        Ok(SubsampleSpec { ng, reps, seed })
    }
}

/// Uniform sample without replacement of min(size, |seq|) entries,
/// original ranks retained, order preserved. Deterministic given seed.
pub fn subsample(seq: &ShingleSequence, size: usize, seed: u64) -> Result<ShingleSequence> {
    if size == 0 {
        return Err(Error::parameter("subsample size must be >= 1"));
    }
    if size >= seq.len() {
        return Ok(seq.clone());
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut picked = rand::seq::index::sample(&mut rng, seq.len(), size).into_vec();
    picked.sort_unstable();
    let entries = picked
        .into_iter()
        .map(|i| seq.entries()[i].clone())
        .collect();
    Ok(ShingleSequence::from_entries(seq.k(), entries))
}

/// Mean, deviation and per-repetition values of the exact similarity of
/// independent ng-sized subsamples of the two sequences.
pub fn gc_estimate(
    a: &ShingleSequence,
    b: &ShingleSequence,
    spec: &SubsampleSpec,
) -> Result<RepeatedEstimate> {
    if a.k() != b.k() {
        return Err(Error::parameter(format!(
            "shingle lengths differ: {} vs {}",
            a.k(),
            b.k()
        )));
    }
    let per_rep = (0..spec.reps)
        .map(|rep| {
            let sub_a = subsample(a, spec.ng, tagged_seed(spec.seed, "a", rep as u64))?;
            let sub_b = subsample(b, spec.ng, tagged_seed(spec.seed, "b", rep as u64))?;
            Ok(multiplicity_oracle(&sub_a, &sub_b)?.similarity)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(RepeatedEstimate::from_values(per_rep))
}
