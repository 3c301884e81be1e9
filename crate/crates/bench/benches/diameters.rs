use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use permbound::extremal;
use permbound::oracle;
use permbound::sample::{random_dag, rng_from_seed, DEFAULT_SEED};
use permbound::Permutation;

fn bench_closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("transitive_closure");
    for n in [64usize, 128, 256] {
        let g = random_dag(n, 0.3, &mut rng_from_seed(DEFAULT_SEED));
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| g.transitive_closure().unwrap())
        });
    }
    group.finish();
}

fn bench_linf_pair(c: &mut Criterion) {
    let mut group = c.benchmark_group("linf_extremal_pair");
    for n in [64usize, 128, 256] {
        let g = random_dag(n, 0.3, &mut rng_from_seed(DEFAULT_SEED));
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| extremal::linf_extremal_pair(g).unwrap())
        });
    }
    group.finish();
}

fn bench_dimension(c: &mut Criterion) {
    let mut group = c.benchmark_group("dimension_at_most_two");
    for n in [32usize, 64, 128] {
        let g = random_dag(n, 0.3, &mut rng_from_seed(DEFAULT_SEED));
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| extremal::dimension_at_most_two(g).unwrap())
        });
    }
    group.finish();
}

fn bench_kendall(c: &mut Criterion) {
    let mut group = c.benchmark_group("kendall_distance");
    let mut rng = rng_from_seed(DEFAULT_SEED);
    for n in [64usize, 256] {
        let a = random_perm(n, &mut rng);
        let b = random_perm(n, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(n), &(a, b), |bch, (a, b)| {
            bch.iter(|| a.kendall_distance(b).unwrap())
        });
    }
    group.finish();
}

fn random_perm(n: usize, rng: &mut impl rand::Rng) -> Permutation {
    use rand::seq::SliceRandom;
    let mut v: Vec<u32> = (1..=n as u32).collect();
    v.shuffle(rng);
    Permutation::new(v).unwrap()
}

fn bench_enumeration(c: &mut Criterion) {
    let g = random_dag(7, 0.3, &mut rng_from_seed(DEFAULT_SEED));
    c.bench_function("enumerate_family/n=7", |b| {
        b.iter(|| oracle::enumerate_family(&g, 8).unwrap())
    });
}

criterion_group!(
    benches,
    bench_closure,
    bench_linf_pair,
    bench_dimension,
    bench_kendall,
    bench_enumeration
);
criterion_main!(benches);
