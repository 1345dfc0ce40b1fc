//! Benchmarks for the hot paths: subgraph enumeration, the complexity
//! pipeline, canonical forms, and whole sweeps.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use netfc_core::{
    canonical_form, census, functional_complexity, generate, run_sweep, SweepMode, TopologyFamily,
};

fn complexity_benches(c: &mut Criterion) {
    let moore = generate(TopologyFamily::MooreMotif).unwrap();
    let ring10 = generate(TopologyFamily::Ring { n: 10 }).unwrap();
    let star12 = generate(TopologyFamily::Star { n: 12 }).unwrap();

    let mut group = c.benchmark_group("functional_complexity");
    group.bench_function("moore_motif", |b| {
        b.iter(|| functional_complexity(black_box(&moore)))
    });
    group.bench_function("ring_10", |b| b.iter(|| functional_complexity(black_box(&ring10))));
    group.bench_function("star_12", |b| b.iter(|| functional_complexity(black_box(&star12))));
    group.finish();
}

fn census_benches(c: &mut Criterion) {
    let mesh10 = generate(TopologyFamily::Mesh { n: 10 }).unwrap();
    let er12 = generate(TopologyFamily::ErdosRenyi { n: 12, edge_probability: 0.4, seed: 9 })
        .unwrap();

    let mut group = c.benchmark_group("subgraph_census");
    group.bench_function("mesh_10", |b| b.iter(|| census(black_box(&mesh10))));
    group.bench_function("er_12_p04", |b| b.iter(|| census(black_box(&er12))));
    group.finish();
}

fn canonical_benches(c: &mut Criterion) {
    let er7 = generate(TopologyFamily::ErdosRenyi { n: 7, edge_probability: 0.5, seed: 5 })
        .unwrap();
    let er8 = generate(TopologyFamily::ErdosRenyi { n: 8, edge_probability: 0.5, seed: 5 })
        .unwrap();

    let mut group = c.benchmark_group("canonical_form");
    group.bench_function("er_7", |b| b.iter(|| canonical_form(black_box(&er7))));
    group.bench_function("er_8", |b| b.iter(|| canonical_form(black_box(&er8))));
    group.finish();
}

fn sweep_benches(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("canonical_n5", |b| {
        b.iter(|| run_sweep(black_box(5), SweepMode::Canonical, None).unwrap())
    });
    group.bench_function("labeled_n5", |b| {
        b.iter(|| run_sweep(black_box(5), SweepMode::Labeled, None).unwrap())
    });
    group.finish();
}

criterion_group!(benches, complexity_benches, census_benches, canonical_benches, sweep_benches);
criterion_main!(benches);
