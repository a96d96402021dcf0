use std::hint::black_box;

use chromhom_bench::complex_inputs;
use chromhom_core::homology::smith_diagonal;
use chromhom_core::{build_restricted_complex, certify_nonplanar, homology_group, Graph};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_restricted_complex");
    for (name, g, shape) in complex_inputs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &(g, shape), |b, (g, s)| {
            b.iter(|| build_restricted_complex(black_box(g), black_box(s)).unwrap())
        });
    }
    group.finish();
}

fn homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("homology");
    for (name, g, shape) in complex_inputs() {
        let complex = build_restricted_complex(&g, &shape).unwrap();
        group.bench_function(BenchmarkId::new("homology_group", name), |b| {
            b.iter(|| homology_group(black_box(complex.d1()), black_box(complex.d2())).unwrap())
        });
        group.bench_function(BenchmarkId::new("smith_diagonal_d2", name), |b| {
            b.iter(|| smith_diagonal(black_box(complex.d2())))
        });
    }
    group.finish();
}

fn certify(c: &mut Criterion) {
    let petersen = Graph::petersen();
    c.bench_function("certify_nonplanar/petersen", |b| b.iter(|| certify_nonplanar(black_box(&petersen)).unwrap()));
    let k6 = Graph::complete(6);
    c.bench_function("certify_nonplanar/K6", |b| b.iter(|| certify_nonplanar(black_box(&k6)).unwrap()));
}

criterion_group!(benches, build, homology, certify);
criterion_main!(benches);
