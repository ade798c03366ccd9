use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use kdecomp::fixtures::{cocl_example, face, v6f10_6};
use kdecomp::{certify_trace, cliques, Decider, Extender, Sheller};
use kdecomp_bench::circulant;

fn decide(c: &mut Criterion) {
    let v6 = v6f10_6();
    c.bench_function("decide v6f10-6 k=0", |b| b.iter(|| Decider::new().decide(black_box(&v6), 0)));
    c.bench_function("decide v6f10-6 k=1", |b| b.iter(|| Decider::new().decide(black_box(&v6), 1)));
    c.bench_function("shell v6f10-6", |b| b.iter(|| Sheller::new().shell(black_box(&v6))));
}

fn extend(c: &mut Criterion) {
    let start = cocl_example();
    c.bench_function("extend_to_cocl 3-dim example", |b| {
        b.iter(|| Extender::new().extend_to_cocl(black_box(&start), face("8")).unwrap())
    });
    c.bench_function("extend_main 3-dim example", |b| {
        b.iter(|| Extender::new().extend_main(black_box(&start)).unwrap())
    });
    let trace = Extender::new().extend_main(&start).unwrap();
    c.bench_function("certify 60-step trace", |b| {
        b.iter_batched(Decider::new, |mut d| certify_trace(black_box(&trace), 1, &mut d), BatchSize::SmallInput)
    });
}

fn clique_enumeration(c: &mut Criterion) {
    let g = circulant(40, &[1, 2, 3, 5, 8]);
    for size in [3, 4, 5] {
        c.bench_function(&format!("cliques circulant(40) size {size}"), |b| b.iter(|| cliques(black_box(&g), size)));
    }
}

criterion_group!(benches, decide, extend, clique_enumeration);
criterion_main!(benches);
