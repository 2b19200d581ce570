//! Min-hash signatures and the RUM estimator.
//!
//! Hash functions are congruences h_i(x) = a_i x + b_i mod n over
//! {1, ..., n}, with a zero remainder mapped to n. Signatures are the
//! per-function minima over a set's members, built two ways that must
//! agree: the column-filling procedure with a sentinel, and the direct
//! coordinate-wise minimum of hash rows.
//!
//! RUM runs min-hashing on the combined shingle collection of the two
//! documents (duplicates kept, modulus n = n_a + n_b), hashing the
//! canonical encoding of each shingle value so a shared value hashes the
//! same from either document.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::seeding::rep_seed;
use crate::shingling::ShingleSequence;
use crate::stats::RepeatedEstimate;

/// Initial value of every signature cell; must never survive in the
/// signature column of a nonempty set.
pub const SIGNATURE_SENTINEL: u64 = u64::MAX;

/// FNV-1a over the UTF-8 bytes of a shingle value. Bit-exact across
/// platforms.
pub fn canonical_encode(value: &str) -> u64 {
    const OFFSET_BASIS: u64 = 14695981039346656037;
    const PRIME: u64 = 1099511628211;
    let mut state = OFFSET_BASIS;
    for &byte in value.as_bytes() {
        state ^= byte as u64;
        state = state.wrapping_mul(PRIME);
    }
    state
}

/// A family of p congruence hash functions modulo n, with outputs in
/// [1, n].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HashFamily {
    p: usize,
    n: u64,
    coefficients: Vec<(u64, u64)>,
    seed: u64,
}

impl HashFamily {
    /// Draw p coefficient pairs from a seeded generator: a_i uniform on
    /// [1, n-1], b_i uniform on [0, n-1]. No coprimality is imposed.
    pub fn new(p: usize, n: u64, seed: u64) -> Result<Self> {
        Self::sample(p, n, seed, false)
    }

    /// Like [`HashFamily::new`] but resamples a_i until gcd(a_i, n) = 1,
    /// making each function a permutation of the residues.
    pub fn new_coprime(p: usize, n: u64, seed: u64) -> Result<Self> {
        Self::sample(p, n, seed, true)
    }

    fn sample(p: usize, n: u64, seed: u64, coprime: bool) -> Result<Self> {
        if p == 0 {
            return Err(Error::parameter("hash count p must be >= 1"));
        }
        if n == 0 {
            return Err(Error::parameter("modulus n must be >= 1"));
        }
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let coefficients = (0..p)
            .map(|_| {
                if n == 1 {
                    return (1, 0);
                }
                let mut a = rng.random_range(1..n);
                while coprime && gcd(a, n) != 1 {
                    a = rng.random_range(1..n);
                }
                let b = rng.random_range(0..n);
                (a, b)
            })
            .collect();
        Ok(HashFamily {
            p,
            n,
            coefficients,
            seed,
        })
    }

    /// Build a family from explicit coefficients (tests and
    /// reproductions of published examples).
    pub fn from_coefficients(n: u64, coefficients: Vec<(u64, u64)>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::parameter("hash count p must be >= 1"));
        }
        if n == 0 {
            return Err(Error::parameter("modulus n must be >= 1"));
        }
        for &(a, b) in &coefficients {
            let a_ok = if n == 1 { a == 1 } else { (1..n).contains(&a) };
            if !a_ok || b >= n.max(1) {
                return Err(Error::parameter(format!(
                    "coefficients ({a}, {b}) out of range for modulus {n}"
                )));
            }
        }
        Ok(HashFamily {
            p: coefficients.len(),
            n,
            coefficients,
            seed: 0,
        })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// h_r(x) for 0-based row r and an already-reduced residue x < n.
    #[inline]
    fn eval_residue(&self, r: usize, x: u64) -> u64 {
        let (a, b) = self.coefficients[r];
        let rem = if self.n <= u32::MAX as u64 {
            (a * x + b) % self.n
        } else {
            ((a as u128 * x as u128 + b as u128) % self.n as u128) as u64
        };
        if rem == 0 {
            self.n
        } else {
            rem
        }
    }

    /// h_r(x) for 0-based row r and arbitrary integer x.
    #[inline]
    pub(crate) fn eval_row(&self, r: usize, x: u64) -> u64 {
        self.eval_residue(r, x % self.n)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// h_i(x) for 1-based function index i, as published: a zero remainder
/// of the euclidean division maps to n.
pub fn eval_hash(family: &HashFamily, i: usize, x: u64) -> Result<u64> {
    if i == 0 || i > family.p {
        return Err(Error::parameter(format!(
            "hash index {i} out of range 1..={}",
            family.p
        )));
    }
    Ok(family.eval_row(i - 1, x))
}

/// p x m table of per-function minima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureMatrix {
    p: usize,
    m: usize,
    entries: Vec<u64>,
}

impl SignatureMatrix {
    pub fn from_entries(p: usize, m: usize, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != p * m {
            return Err(Error::parameter(format!(
                "expected {} entries for a {p}x{m} signature, got {}",
                p * m,
                entries.len()
            )));
        }
        Ok(SignatureMatrix { p, m, entries })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, r: usize, j: usize) -> u64 {
        self.entries[r * self.m + j]
    }

    fn set(&mut self, r: usize, j: usize, value: u64) {
        self.entries[r * self.m + j] = value;
    }

    /// A column of an empty set keeps the sentinel everywhere.
    pub fn is_degenerate_column(&self, j: usize) -> bool {
        (0..self.p).any(|r| self.get(r, j) == SIGNATURE_SENTINEL)
    }

    fn check_column(&self, j: usize) -> Result<()> {
        if j >= self.m {
            return Err(Error::parameter(format!(
                "signature column {j} out of range for {} sets",
                self.m
            )));
        }
        Ok(())
    }
}

use crate::representation::RepresentationMatrix;

fn check_dims(matrix: &RepresentationMatrix, family: &HashFamily) -> Result<()> {
    if family.n != matrix.n() as u64 {
        return Err(Error::parameter(format!(
            "hash modulus {} does not match universe size {}",
            family.n,
            matrix.n()
        )));
    }
    Ok(())
}

/// The published column-filling procedure: start every cell at the
/// sentinel; for each column and each member element i (numbered from
/// 1), replace c_rj by min(c_rj, h_r(i)).
pub fn signature_fill(
    matrix: &RepresentationMatrix,
    family: &HashFamily,
) -> Result<SignatureMatrix> {
    check_dims(matrix, family)?;
    let (p, m) = (family.p, matrix.m());
    let mut sig = SignatureMatrix {
        p,
        m,
        entries: vec![SIGNATURE_SENTINEL; p * m],
    };
    for j in 0..m {
        for i in 0..matrix.n() {
            if !matrix.get(i, j) {
                continue;
            }
            let element = (i + 1) as u64;
            for r in 0..p {
                let h = family.eval_row(r, element);
                if h < sig.get(r, j) {
                    sig.set(r, j, h);
                }
            }
        }
    }
    Ok(sig)
}

/// Same signature by the direct criterion: column j is the
/// coordinate-wise minimum of the hash rows of the members of set j.
pub fn signature_min(
    matrix: &RepresentationMatrix,
    family: &HashFamily,
) -> Result<SignatureMatrix> {
    check_dims(matrix, family)?;
    let (p, m) = (family.p, matrix.m());
    let mut entries = Vec::with_capacity(p * m);
    let columns: Vec<Vec<u64>> = (0..m)
        .map(|j| {
            matrix
                .column_members(j)
                .map(|i| {
                    (0..p)
                        .map(|r| family.eval_row(r, (i + 1) as u64))
                        .collect::<Vec<u64>>()
                })
                .fold(vec![SIGNATURE_SENTINEL; p], |acc, row| {
                    acc.iter().zip(&row).map(|(&x, &y)| x.min(y)).collect()
                })
        })
        .collect();
    for r in 0..p {
        for column in &columns {
            entries.push(column[r]);
        }
    }
    SignatureMatrix::from_entries(p, m, entries)
}

/// Fraction of hash functions on which the two signature columns agree.
pub fn signature_similarity(sig: &SignatureMatrix, j1: usize, j2: usize) -> Result<f64> {
    sig.check_column(j1)?;
    sig.check_column(j2)?;
    if sig.p == 0 {
        return Err(Error::parameter("signature has no rows"));
    }
    let matches = (0..sig.p).filter(|&r| sig.get(r, j1) == sig.get(r, j2)).count();
    Ok(matches as f64 / sig.p as f64)
}

/// RUM similarity estimate for two shingle sequences: min-hash over the
/// combined n = n_a + n_b collection, hashing each shingle's canonical
/// value encoding. Deterministic given the seed.
pub fn rum_estimate(
    a: &ShingleSequence,
    b: &ShingleSequence,
    p: usize,
    seed: u64,
) -> Result<f64> {
    if a.k() != b.k() {
        return Err(Error::parameter(format!(
            "shingle lengths differ: {} vs {}",
            a.k(),
            b.k()
        )));
    }
    if p == 0 {
        return Err(Error::parameter("hash count p must be >= 1"));
    }
    match (a.is_empty(), b.is_empty()) {
        (true, true) => return Ok(1.0),
        (true, false) | (false, true) => return Ok(0.0),
        _ => {}
    }
    let n = (a.len() + b.len()) as u64;
    let family = HashFamily::new(p, n, seed)?;
    let residues_a: Vec<u64> = a.values().map(|v| canonical_encode(v) % n).collect();
    let residues_b: Vec<u64> = b.values().map(|v| canonical_encode(v) % n).collect();
    let mut matches = 0usize;
    for r in 0..p {
        let min_of = |xs: &[u64]| {
            xs.iter()
                .map(|&x| family.eval_residue(r, x))
                .min()
                .expect("nonempty")
        };
        if min_of(&residues_a) == min_of(&residues_b) {
            matches += 1;
        }
    }
    Ok(matches as f64 / p as f64)
}

/// RUM repeated over independent derived seeds: mean, sample standard
/// deviation (in the same [0,1] scale) and per-repetition values.
pub fn rum_repeated(
    a: &ShingleSequence,
    b: &ShingleSequence,
    p: usize,
    reps: usize,
    seed: u64,
) -> Result<RepeatedEstimate> {
    if reps == 0 {
        return Err(Error::parameter("reps must be >= 1"));
    }
    let per_rep = (0..reps)
        .map(|r| rum_estimate(a, b, p, rep_seed(seed, r as u64)))
        .collect::<Result<Vec<f64>>>()?;
    Ok(RepeatedEstimate::from_values(per_rep))
}
