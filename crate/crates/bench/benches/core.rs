use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use lusztig_core::{
    alpha, beta_oracle, enumerate_shapes, max_gamma, max_series_size, partition_count, Family, GammaKind, GroupSpec,
    PartitionMemo, QParity,
};

fn counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("counts");
    group.bench_function("p(300) fresh memo", |b| b.iter(|| PartitionMemo::new().p(black_box(300))));
    group.bench_function("p(300) warm", |b| b.iter(|| partition_count(black_box(300))));
    group.bench_function("alpha(300)", |b| b.iter(|| alpha(black_box(300))));
    group.finish();
}

fn maxima(c: &mut Criterion) {
    let mut group = c.benchmark_group("maxima");
    group.sample_size(20);
    group.bench_function("beta_oracle(40)", |b| b.iter(|| beta_oracle(black_box(40))));
    group.bench_function("max_gamma(plus_minus, 60)", |b| b.iter(|| max_gamma(GammaKind::PlusMinus, black_box(60))));
    let d45 = GroupSpec::new(Family::DMinus, 45, QParity::Odd).unwrap();
    group.bench_function("max_series_size(D-, 45, odd)", |b| b.iter(|| max_series_size(black_box(&d45))));
    let d14 = GroupSpec::new(Family::DPlus, 14, QParity::Odd).unwrap();
    group.bench_function("enumerate_shapes(D+, 14, odd)", |b| {
        b.iter(|| enumerate_shapes(black_box(&d14)).unwrap().count())
    });
    group.finish();
}

criterion_group!(benches, counts, maxima);
criterion_main!(benches);
