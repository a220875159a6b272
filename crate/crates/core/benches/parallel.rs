//! Data-parallel paths against their sequential baselines.
//!
//! Run with `cargo bench -p mvca-core`. Build with
//! `--no-default-features` to time the fully sequential configuration
//! instead (the `*_seq` entries then coincide with the defaults).

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use mvca_core::algebra::rat;
use mvca_core::analysis::{
    classify_exceptional, classify_exceptional_seq, limit_cubic_sweep, limit_cubic_sweep_seq,
};
use mvca_core::evolution::{Configuration, SpaceTimeDiagram};
use mvca_core::logic::LogicSystem;
use mvca_core::rules::LocalRule;

fn bench_evolve_float(c: &mut Criterion) {
    let rule = LocalRule::from_number(110);
    let mut group = c.benchmark_group("evolve_float_t512");
    group.sample_size(20);
    group.bench_function("parallel", |b| {
        b.iter(|| {
            let seed = Configuration::single_seed(black_box(0.426)).unwrap();
            SpaceTimeDiagram::evolve(seed, &rule, LogicSystem::Probabilistic, 512).unwrap()
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let seed = Configuration::single_seed(black_box(0.426)).unwrap();
            SpaceTimeDiagram::evolve_seq(seed, &rule, LogicSystem::Probabilistic, 512).unwrap()
        })
    });
    group.finish();
}

fn bench_evolve_exact(c: &mut Criterion) {
    let rule = LocalRule::from_number(110);
    let mut group = c.benchmark_group("evolve_exact_t12");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| {
            let seed = Configuration::single_seed(rat(1, 2)).unwrap();
            SpaceTimeDiagram::evolve(seed, &rule, LogicSystem::Cfms, 12).unwrap()
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let seed = Configuration::single_seed(rat(1, 2)).unwrap();
            SpaceTimeDiagram::evolve_seq(seed, &rule, LogicSystem::Cfms, 12).unwrap()
        })
    });
    group.finish();
}

fn bench_classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify_exceptional");
    group.sample_size(20);
    group.bench_function("parallel", |b| b.iter(classify_exceptional));
    group.bench_function("sequential", |b| b.iter(classify_exceptional_seq));
    group.finish();
}

fn bench_cubic_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("cubic_sweep_99");
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(|| limit_cubic_sweep(99).unwrap()));
    group.bench_function("sequential", |b| {
        b.iter(|| limit_cubic_sweep_seq(99).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_evolve_float,
    bench_evolve_exact,
    bench_classify,
    bench_cubic_sweep
);
criterion_main!(benches);
