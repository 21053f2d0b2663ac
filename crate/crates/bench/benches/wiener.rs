use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hexchain_bench::{random_code, SEED};
use hexchain_core::{build_chain, wiener_bfs, wiener_closed, wiener_recurrence, ChainKind};
use std::hint::black_box;

const SIZES: [usize; 3] = [10, 100, 1000];

fn methods(c: &mut Criterion) {
    for kind in ChainKind::ALL {
        let mut group = c.benchmark_group(format!("wiener/{kind}"));
        group.sample_size(20);
        for n in SIZES {
            let code = random_code(n, SEED);
            group.bench_with_input(BenchmarkId::new("closed", n), &code, |b, code| {
                b.iter(|| wiener_closed(kind, black_box(code)).unwrap())
            });
            group.bench_with_input(BenchmarkId::new("recurrence", n), &code, |b, code| {
                b.iter(|| wiener_recurrence(kind, black_box(code)).unwrap())
            });
            let chain = build_chain(kind, &code);
            group.bench_with_input(BenchmarkId::new("bfs", n), &chain, |b, chain| {
                b.iter(|| wiener_bfs(black_box(&chain.graph)).unwrap())
            });
        }
        group.finish();
    }
}

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    for n in SIZES {
        let code = random_code(n, SEED);
        for kind in ChainKind::ALL {
            group.bench_with_input(BenchmarkId::new(kind.as_str(), n), &code, |b, code| {
                b.iter(|| build_chain(kind, black_box(code)))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, methods, construction);
criterion_main!(benches);
