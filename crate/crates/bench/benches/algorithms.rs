use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use ultrametric::{build_representing_tree, hausdorff, hausdorff_oracle, kruskal_mst, msp_greedy, UltrametricSpace};
use ultrametric_bench::{sample_sets, sample_space};

const SIZES: [usize; 3] = [25, 50, 100];

fn tree(c: &mut Criterion) {
    let mut group = c.benchmark_group("representing_tree");
    for n in SIZES {
        let space = sample_space(n, 7);
        group.bench_with_input(BenchmarkId::from_parameter(n), &space, |b, s| {
            b.iter(|| build_representing_tree(black_box(s)))
        });
    }
    group.finish();
}

fn spanning(c: &mut Criterion) {
    let mut group = c.benchmark_group("spanning");
    for n in SIZES {
        let space = sample_space(n, 7);
        group.bench_with_input(BenchmarkId::new("greedy_path", n), &space, |b, s| {
            b.iter(|| msp_greedy(black_box(s), 0).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("kruskal", n), &space, |b, s| {
            b.iter(|| kruskal_mst(black_box(s)))
        });
    }
    group.finish();
}

fn hausdorff_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("hausdorff");
    for n in SIZES {
        let space: UltrametricSpace = sample_space(n, 7);
        let tree = build_representing_tree(&space);
        let (a, bset) = sample_sets(n);
        group.bench_function(BenchmarkId::new("tree", n), |b| {
            b.iter(|| hausdorff(&space, &tree, black_box(&a), black_box(&bset)).unwrap())
        });
        group.bench_function(BenchmarkId::new("brute_force", n), |b| {
            b.iter(|| hausdorff_oracle(&space, black_box(&a), black_box(&bset)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, tree, spanning, hausdorff_routes);
criterion_main!(benches);
