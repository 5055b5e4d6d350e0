use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use kroncode::analyze::{
    analyze, intersection_array_check, AnalysisConfig, CosetDistributions, SyndromeGraph,
    SyndromeSpace, DEFAULT_BUDGET,
};
use kroncode::construct::hamming_matrix;
use kroncode::FieldTable;
use kroncode_bench::fixtures;
use std::sync::Arc;

fn syndrome_graph(c: &mut Criterion) {
    let mut group = c.benchmark_group("syndrome_graph");
    for (name, spec) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &spec, |b, spec| {
            b.iter(|| {
                let g = SyndromeGraph::build(black_box(spec), DEFAULT_BUDGET).unwrap();
                intersection_array_check(&g)
            })
        });
    }
    group.finish();
}

fn coset_distributions(c: &mut Criterion) {
    let mut group = c.benchmark_group("coset_distributions");
    for (name, spec) in fixtures() {
        let space = SyndromeSpace::new(&spec, DEFAULT_BUDGET).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &space, |b, space| {
            b.iter(|| CosetDistributions::compute(black_box(space), DEFAULT_BUDGET).unwrap())
        });
    }
    group.finish();
}

fn full_analysis(c: &mut Criterion) {
    let mut group = c.benchmark_group("analyze");
    group.sample_size(10);
    for (name, spec) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &spec, |b, spec| {
            b.iter(|| analyze(black_box(spec), &AnalysisConfig::default()).unwrap())
        });
    }
    group.finish();
}

fn kronecker(c: &mut Criterion) {
    let f = Arc::new(FieldTable::new(3).unwrap());
    let a = hamming_matrix(&f, 3).unwrap();
    let b = hamming_matrix(&f, 3).unwrap();
    c.bench_function("kronecker_h3_h3_gf3", |bench| {
        bench.iter(|| black_box(&a).kronecker(black_box(&b)).unwrap())
    });
    let h = a.kronecker(&b).unwrap();
    c.bench_function("rank_169x9_gf3", |bench| {
        bench.iter(|| black_box(&h).rank())
    });
}

criterion_group!(
    benches,
    syndrome_graph,
    coset_distributions,
    full_analysis,
    kronecker
);
criterion_main!(benches);
