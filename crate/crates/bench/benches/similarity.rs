//! Criterion benchmarks: the faithful quadratic matcher against the
//! linear multiplicity oracle, and the approximate estimators.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use shingle_sim::{
    gc_estimate, match_similarity, multiplicity_oracle, rum_estimate, shingle, SubsampleSpec,
};

/// Two synthetic texts over a small alphabet sharing a common prefix,
/// so the pair lands at a mid-range similarity.
fn synthetic_pair(len: usize, seed: u64) -> (String, String) {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut gen = |n: usize| -> String {
        (0..n)
            .map(|_| char::from(b'a' + rng.random_range(0..6u8)))
            .collect()
    };
    let shared = gen(len / 2);
    let mut a = shared.clone();
    a.push_str(&gen(len / 2));
    let mut b = shared;
    b.push_str(&gen(len / 2));
    (a, b)
}

fn bench_exact_paths(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    for &len in &[1_000usize, 5_000, 20_000] {
        let (ta, tb) = synthetic_pair(len, 7);
        let a = shingle(&ta, 3).unwrap();
        let b = shingle(&tb, 3).unwrap();
        group.bench_with_input(BenchmarkId::new("matcher", len), &len, |bench, _| {
            bench.iter(|| match_similarity(&a, &b).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("oracle", len), &len, |bench, _| {
            bench.iter(|| multiplicity_oracle(&a, &b).unwrap())
        });
    }
    group.finish();
}

fn bench_estimators(c: &mut Criterion) {
    let (ta, tb) = synthetic_pair(60_000, 11);
    let a = shingle(&ta, 3).unwrap();
    let b = shingle(&tb, 3).unwrap();
    let mut group = c.benchmark_group("estimators");
    group.sample_size(10);
    group.bench_function("rum_p20", |bench| {
        bench.iter(|| rum_estimate(&a, &b, 20, 3).unwrap())
    });
    group.bench_function("gc_ng10000", |bench| {
        let spec = SubsampleSpec::new(10_000, 1, 3).unwrap();
        bench.iter(|| gc_estimate(&a, &b, &spec).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_exact_paths, bench_estimators);
criterion_main!(benches);
