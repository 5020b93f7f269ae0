use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use riordan::expansion::expand_b;
use riordan::sequences::{g_from_b, BSequence};
use riordan::Series;

fn bench_expand_b(c: &mut Criterion) {
    let mut group = c.benchmark_group("expand_b");
    for n in [8, 12, 16] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, &n| {
            bench.iter(|| expand_b(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn bench_g_from_b(c: &mut Criterion) {
    let b = BSequence::from_ints(&[1, 2, -1, 1]);
    let mut group = c.benchmark_group("g_from_b");
    for order in [10, 20] {
        group.bench_with_input(
            BenchmarkId::from_parameter(order),
            &order,
            |bench, &order| bench.iter(|| g_from_b(black_box(&b), order).unwrap()),
        );
    }
    group.finish();
}

fn bench_reversion(c: &mut Criterion) {
    let u = Series::from_ints(&[0, 1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786]);
    c.bench_function("reversion/12", |bench| {
        bench.iter(|| black_box(&u).reversion().unwrap())
    });
}

criterion_group!(benches, bench_expand_b, bench_g_from_b, bench_reversion);
criterion_main!(benches);
