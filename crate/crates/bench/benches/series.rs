use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qdissect_bench::QUOTIENTS;
use qdissect_core::overpartitions::{overpartition_oracle, overpartition_oracle_mod};
use qdissect_core::qlang::{eval, parse};
use qdissect_core::special::eta_f;
use std::hint::black_box;

fn multiply(c: &mut Criterion) {
    let mut g = c.benchmark_group("mul");
    for &n in &[500usize, 2000] {
        let a = eta_f(1, n, 0).pow(7).unwrap();
        let b = eta_f(2, n, 0).pow(5).unwrap();
        g.bench_with_input(BenchmarkId::new("exact", n), &n, |bench, _| {
            bench.iter(|| black_box(a.mul(&b).unwrap()))
        });
        let (am, bm) = (a.reduce_mod(40).unwrap(), b.reduce_mod(40).unwrap());
        g.bench_with_input(BenchmarkId::new("mod40", n), &n, |bench, _| {
            bench.iter(|| black_box(am.mul(&bm).unwrap()))
        });
    }
    g.finish();
}

fn quotients(c: &mut Criterion) {
    let mut g = c.benchmark_group("eta_quotient");
    for src in QUOTIENTS {
        let e = parse(src).unwrap();
        g.bench_function(BenchmarkId::new("exact_500", src), |b| {
            b.iter(|| black_box(eval(&e, 500, 0).unwrap()))
        });
        g.bench_function(BenchmarkId::new("mod5_4035", src), |b| {
            b.iter(|| black_box(eval(&e, 4035, 5).unwrap()))
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    g.bench_function("exact_2000", |b| b.iter(|| black_box(overpartition_oracle(2000))));
    g.bench_function("mod40_4035", |b| b.iter(|| black_box(overpartition_oracle_mod(4035, 40))));
    g.finish();
}

criterion_group!(benches, multiply, quotients, oracle);
criterion_main!(benches);
