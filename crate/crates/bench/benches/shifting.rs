use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use shiftlab::homology::betti;
use shiftlab::minors::has_clique_minor;
use shiftlab::obstruction::smith_class;
use shiftlab::rigidity::rigidity_ranks;
use shiftlab::{shift, GenericConfig, Variant};
use shiftlab_bench::{graph_workloads, obstruction_workloads, shifting_workloads};

fn shifting(c: &mut Criterion) {
    let cfg = GenericConfig::default();
    for variant in Variant::BOTH {
        let mut group = c.benchmark_group(format!("shift_{variant}"));
        group.sample_size(10);
        for (name, k) in shifting_workloads() {
            group.bench_with_input(BenchmarkId::from_parameter(name), &k, |b, k| {
                b.iter(|| shift(black_box(k), variant, &cfg).expect("stable"))
            });
        }
        group.finish();
    }
}

fn homology(c: &mut Criterion) {
    let prime = GenericConfig::default().prime;
    let mut group = c.benchmark_group("betti");
    for (name, k) in shifting_workloads() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &k, |b, k| {
            b.iter(|| betti(black_box(k), prime).expect("prime"))
        });
    }
    group.finish();
}

fn graphs(c: &mut Criterion) {
    let cfg = GenericConfig::default();
    let mut group = c.benchmark_group("graphs");
    group.sample_size(10);
    for (name, g) in graph_workloads() {
        group.bench_with_input(BenchmarkId::new("rigidity_3", name), &g, |b, g| {
            b.iter(|| rigidity_ranks(black_box(g), 3, &cfg).expect("stable"))
        });
        group.bench_with_input(BenchmarkId::new("clique_minor_5", name), &g, |b, g| {
            b.iter(|| has_clique_minor(black_box(g), 5, 50_000_000).expect("within budget"))
        });
    }
    group.finish();
}

fn obstructions(c: &mut Criterion) {
    let mut group = c.benchmark_group("smith");
    group.sample_size(10);
    for (name, k, m) in obstruction_workloads() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &k, |b, k| {
            b.iter(|| smith_class(black_box(k), m).expect("degree in range"))
        });
    }
    group.finish();
}

criterion_group!(benches, shifting, homology, graphs, obstructions);
criterion_main!(benches);
