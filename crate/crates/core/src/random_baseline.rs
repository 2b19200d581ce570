//! Distribution of the intersection size of two uniformly drawn subsets
//! and the expected similarity of two randomly written texts.
//!
//! For subsets of sizes k and m of an n-element universe the overlap
//! size follows the hypergeometric law
//!   P(|X ∩ Y| = j) = C(k,j) C(n-k, m-j) / C(n,m)
//! on the support max(0, k+m-n) <= j <= min(k,m). Small universes go
//! through exact integer binomials; large ones use a log-space
//! recurrence so corpus-scale sizes (n ~ 2e5) neither overflow nor lose
//! normalization.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::stats::kahan_sum;

/// Largest n handled by the exact integer path.
const EXACT_N_LIMIT: u64 = 30;

/// The pmf of |X ∩ Y| for uniform subsets of sizes k and m from an
/// n-universe, indexed by j = 0..=min(k,m).
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapDistribution {
    pub n: u64,
    pub k: u64,
    pub m: u64,
    pmf: Vec<f64>,
}

impl OverlapDistribution {
    /// Probabilities indexed by j = 0..=min(k,m).
    pub fn pmf(&self) -> &[f64] {
        &self.pmf
    }

    pub fn prob(&self, j: u64) -> f64 {
        self.pmf.get(j as usize).copied().unwrap_or(0.0)
    }

    /// Inclusive support bounds (max(0, k+m-n), min(k,m)).
    pub fn support(&self) -> (u64, u64) {
        ((self.k + self.m).saturating_sub(self.n), self.k.min(self.m))
    }

    /// Total mass by compensated summation.
    pub fn total_mass(&self) -> f64 {
        kahan_sum(self.pmf.iter().copied())
    }
}

/// Exact binomial coefficient; callers keep n small enough for u128.
pub(crate) fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) as u128 / i as u128;
    }
    acc
}

fn ln_binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    ln_gamma(n as f64 + 1.0) - ln_gamma(k as f64 + 1.0) - ln_gamma((n - k) as f64 + 1.0)
}

fn check_sizes(n: u64, k: u64, m: u64) -> Result<()> {
    if k > n || m > n {
        return Err(Error::parameter(format!(
            "subset sizes k={k}, m={m} must not exceed universe size n={n}"
        )));
    }
    Ok(())
}

/// Law of the overlap size of two uniform subsets of sizes k and m.
pub fn overlap_pmf(n: u64, k: u64, m: u64) -> Result<OverlapDistribution> {
    check_sizes(n, k, m)?;
    let lo = (k + m).saturating_sub(n);
    let hi = k.min(m);
    let mut pmf = vec![0.0; hi as usize + 1];

    if n <= EXACT_N_LIMIT {
        // Exact integers; the f64 divisions are correctly rounded, so
        // values agree bit-for-bit with enumeration frequencies.
        let total = binomial_u128(n, m);
        for j in lo..=hi {
            let ways = binomial_u128(k, j) * binomial_u128(n - k, m - j);
            pmf[j as usize] = ways as f64 / total as f64;
        }
    } else {
        // Log-space weights via the term ratio
        //   w(j+1)/w(j) = (k-j)(m-j) / ((j+1)(n-k-m+j+1)),
        // anchored at the lower support end, then normalized.
        let len = (hi - lo + 1) as usize;
        let mut logw = vec![0.0; len];
        logw[0] = ln_binomial(k, lo) + ln_binomial(n - k, m - lo) - ln_binomial(n, m);
        for (idx, j) in (lo..hi).enumerate() {
            let num = (k - j) as f64 * (m - j) as f64;
            let den = (j + 1) as f64 * (n + j + 1 - k - m) as f64;
            logw[idx + 1] = logw[idx] + num.ln() - den.ln();
        }
        let max = logw.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let weights: Vec<f64> = logw.iter().map(|&lw| (lw - max).exp()).collect();
        let total = kahan_sum(weights.iter().copied());
        for (idx, w) in weights.into_iter().enumerate() {
            pmf[lo as usize + idx] = w / total;
        }
    }

    Ok(OverlapDistribution { n, k, m, pmf })
}

fn overlap_similarity(j: u64, k: u64, m: u64) -> f64 {
    if k + m == 0 {
        1.0
    } else {
        j as f64 / (m + k - j) as f64
    }
}

/// Expected Jaccard similarity of two uniform random subsets: the
/// baseline p_R against which an observed similarity is judged.
pub fn expected_similarity(n: u64, k: u64, m: u64) -> Result<f64> {
    if k == 0 && m == 0 {
        check_sizes(n, k, m)?;
        return Ok(1.0);
    }
    let dist = overlap_pmf(n, k, m)?;
    let (lo, hi) = dist.support();
    Ok(kahan_sum(
        (lo..=hi).map(|j| overlap_similarity(j, k, m) * dist.prob(j)),
    ))
}

/// Monte Carlo check of [`expected_similarity`]: draws `trials` subset
/// pairs without replacement and returns (mean, standard error).
pub fn monte_carlo_expected_similarity(
    n: u64,
    k: u64,
    m: u64,
    trials: u64,
    seed: u64,
) -> Result<(f64, f64)> {
    check_sizes(n, k, m)?;
    if trials == 0 {
        return Err(Error::parameter("trials must be >= 1"));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut in_x = vec![false; n as usize];
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for _ in 0..trials {
        let xs = rand::seq::index::sample(&mut rng, n as usize, k as usize);
        let ys = rand::seq::index::sample(&mut rng, n as usize, m as usize);
        for i in xs.iter() {
            in_x[i] = true;
        }
        let j = ys.iter().filter(|&i| in_x[i]).count() as u64;
        for i in xs.iter() {
            in_x[i] = false;
        }
        let sim = overlap_similarity(j, k, m);
        sum += sim;
        sum_sq += sim * sim;
    }
    let mean = sum / trials as f64;
    let std_err = if trials > 1 {
        let var = ((sum_sq - sum * sum / trials as f64) / (trials - 1) as f64).max(0.0);
        (var / trials as f64).sqrt()
    } else {
        0.0
    };
    Ok((mean, std_err))
}


#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_case_matches_hand_enumeration() {
        // All 6x6 subset pairs of a 4-universe with k = m = 2.
        let d = overlap_pmf(4, 2, 2).unwrap();
        assert_eq!(d.pmf(), &[1.0 / 6.0, 4.0 / 6.0, 1.0 / 6.0]);
    }

    #[test]
    fn pmf_matches_enumeration_exactly_up_to_n6() {
        for n in 0..=6u64 {
            for k in 0..=n {
                for m in 0..=n {
                    let got = overlap_pmf(n, k, m).unwrap();
                    let want = enumeration::overlap_pmf_by_enumeration(n, k, m);
                    assert_eq!(got.pmf(), want.as_slice(), "n={n} k={k} m={m}");
                }
            }
        }
    }

    #[test]
    fn full_universe_concentrates_at_n() {
        let d = overlap_pmf(7, 7, 7).unwrap();
        assert_eq!(d.prob(7), 1.0);
        assert_eq!(kahan_sum(d.pmf().iter().take(7).copied()), 0.0);
        assert_eq!(expected_similarity(7, 7, 7).unwrap(), 1.0);
    }

    #[test]
    fn oversized_subsets_are_rejected() {
        assert!(matches!(overlap_pmf(4, 5, 2), Err(Error::Parameter(_))));
        assert!(matches!(overlap_pmf(4, 2, 5), Err(Error::Parameter(_))));
    }

    #[test]
    fn expected_similarity_4_2_2_is_7_18() {
        let e = expected_similarity(4, 2, 2).unwrap();
        assert!((e - 7.0 / 18.0).abs() < 1e-15);
    }

    #[test]
    fn expected_similarity_matches_enumeration_up_to_n6() {
        for n in 0..=6u64 {
            for k in 0..=n {
                for m in 0..=n {
                    let got = expected_similarity(n, k, m).unwrap();
                    let want = enumeration::expected_similarity_by_enumeration(n, k, m);
                    assert!((got - want).abs() < 1e-14, "n={n} k={k} m={m}");
                }
            }
        }
    }

    #[test]
    fn empty_subsets_use_identity_convention() {
        assert_eq!(expected_similarity(5, 0, 0).unwrap(), 1.0);
    }

    #[test]
    fn large_universe_mass_is_normalized() {
        for &(n, k, m) in &[(200u64, 100, 100), (20_000, 9_000, 11_000)] {
            let d = overlap_pmf(n, k, m).unwrap();
            assert!((d.total_mass() - 1.0).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn monte_carlo_agrees_with_exact_value() {
        let exact = expected_similarity(200, 100, 100).unwrap();
        let (mc, se) = monte_carlo_expected_similarity(200, 100, 100, 20_000, 42).unwrap();
        assert!((mc - exact).abs() <= 3.0 * se, "mc={mc} exact={exact} se={se}");

        let (mc, se) = monte_carlo_expected_similarity(4, 2, 2, 50_000, 7).unwrap();
        assert!((mc - 7.0 / 18.0).abs() <= 3.0 * se);
    }

    #[test]
    fn full_universe_monte_carlo_is_exactly_one() {
        let (mc, se) = monte_carlo_expected_similarity(9, 9, 9, 100, 3).unwrap();
        assert_eq!(mc, 1.0);
        assert_eq!(se, 0.0);
    }

    #[test]
    fn zero_trials_is_rejected() {
        assert!(matches!(
            monte_carlo_expected_similarity(4, 2, 2, 0, 1),
            Err(Error::Parameter(_))
        ));
    }

    proptest! {
        #[test]
        fn pmf_is_symmetric_in_k_and_m(n in 1u64..120, a in 0u64..120, b in 0u64..120) {
            let k = a % (n + 1);
            let m = b % (n + 1);
            let km = overlap_pmf(n, k, m).unwrap();
            let mk = overlap_pmf(n, m, k).unwrap();
            for (x, y) in km.pmf().iter().zip(mk.pmf()) {
                prop_assert!((x - y).abs() < 1e-12);
            }
        }

        #[test]
        fn pmf_is_zero_exactly_outside_support(n in 1u64..=16, a in 0u64..=16, b in 0u64..=16) {
            let k = a % (n + 1);
            let m = b % (n + 1);
            let d = overlap_pmf(n, k, m).unwrap();
            let (lo, hi) = d.support();
            for (j, &p) in d.pmf().iter().enumerate() {
                let inside = (j as u64) >= lo && (j as u64) <= hi;
                prop_assert_eq!(p > 0.0, inside, "j={} lo={} hi={}", j, lo, hi);
                prop_assert!((0.0..=1.0).contains(&p));
            }
            prop_assert!((d.total_mass() - 1.0).abs() < 1e-12);
        }
    }
}
