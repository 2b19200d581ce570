//! Exact similarity of two shingle sequences.
//!
//! Two routes that must agree on every input: the monogamous matching
//! scan with sentinel flags (quadratic, kept in its faithful form), and
//! the multiplicity-count table (linear, used on the hot path). Plain set
//! Jaccard and the dissimilarity metric live here too.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::shingling::ShingleSequence;

/// Outcome of an exact comparison: matched count and derived similarity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchResult {
    /// Number of matched shingles.
    pub kc: usize,
    pub n_a: usize,
    pub n_b: usize,
    /// kc / (n_a + n_b - kc); 1 when both sequences are empty.
    pub similarity: f64,
}

impl MatchResult {
    fn new(kc: usize, n_a: usize, n_b: usize) -> Self {
        let similarity = if n_a + n_b == 0 {
            1.0
        } else {
            kc as f64 / (n_a + n_b - kc) as f64
        };
        MatchResult {
            kc,
            n_a,
            n_b,
            similarity,
        }
    }
}

fn check_same_k(a: &ShingleSequence, b: &ShingleSequence) -> Result<()> {
    if a.k() != b.k() {
        return Err(Error::parameter(format!(
            "shingle lengths differ: {} vs {}",
            a.k(),
            b.k()
        )));
    }
    Ok(())
}

/// Intern both value lists to small ids so the quadratic scan compares
/// integers instead of strings. Equality of ids is equality of values.
fn intern<'s>(a: &'s ShingleSequence, b: &'s ShingleSequence) -> (Vec<u32>, Vec<u32>) {
    let mut table: HashMap<&'s str, u32> = HashMap::new();
    let mut assign = |out: &mut Vec<u32>, seq: &'s ShingleSequence| {
        for s in seq.values() {
            let next = table.len() as u32;
            out.push(*table.entry(s).or_insert(next));
        }
    };
    let mut ids_a = Vec::with_capacity(a.len());
    let mut ids_b = Vec::with_capacity(b.len());
    assign(&mut ids_a, a);
    assign(&mut ids_b, b);
    (ids_a, ids_b)
}

/// The monogamous matching scan: every shingle of `a` marries at most one
/// unmarried shingle of `b` with equal value, greedily in rank order.
pub fn match_similarity(a: &ShingleSequence, b: &ShingleSequence) -> Result<MatchResult> {
    check_same_k(a, b)?;
    let (ids_a, ids_b) = intern(a, b);
    let mut test_a = vec![false; ids_a.len()];
    let mut test_b = vec![false; ids_b.len()];
    let mut kc = 0usize;
    for (i, &id_a) in ids_a.iter().enumerate() {
        if test_a[i] {
            continue;
        }
        for (j, &id_b) in ids_b.iter().enumerate() {
            if test_b[j] {
                continue;
            }
            if id_a == id_b {
                kc += 1;
                test_a[i] = true;
                test_b[j] = true;
                break;
            }
        }
    }
    Ok(MatchResult::new(kc, ids_a.len(), ids_b.len()))
}

/// Linear-time equivalent of [`match_similarity`]: kc is the sum over
/// distinct values of the smaller of the two multiplicities.
pub fn multiplicity_oracle(a: &ShingleSequence, b: &ShingleSequence) -> Result<MatchResult> {
    check_same_k(a, b)?;
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for v in a.values() {
        *counts.entry(v).or_insert(0) += 1;
    }
    let mut kc = 0usize;
    for v in b.values() {
        if let Some(c) = counts.get_mut(v) {
            if *c > 0 {
                *c -= 1;
                kc += 1;
            }
        }
    }
    Ok(MatchResult::new(kc, a.len(), b.len()))
}

/// |a ∩ b| / |a ∪ b|; 1 when both sets are empty.
pub fn set_jaccard<T: Eq + Hash>(
    a: &std::collections::HashSet<T>,
    b: &std::collections::HashSet<T>,
) -> f64 {
    let inter = a.intersection(b).count();
    let union = a.len() + b.len() - inter;
    if union == 0 {
        1.0
    } else {
        inter as f64 / union as f64
    }
}

/// 1 - set_jaccard: the dissimilarity metric.
pub fn jaccard_distance<T: Eq + Hash>(
    a: &std::collections::HashSet<T>,
    b: &std::collections::HashSet<T>,
) -> f64 {
    1.0 - set_jaccard(a, b)
}
