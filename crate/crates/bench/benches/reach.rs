use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gencol::graph::named::robertson;
use gencol::heuristics::degeneracy_order;
use gencol::reach::{eval_adm, eval_wcol, profile};
use gencol_bench::sparse_graph;

fn weak_reach(c: &mut Criterion) {
    let mut group = c.benchmark_group("eval_wcol");
    for n in [200, 1000] {
        let g = sparse_graph(n, 4.0, 1);
        let order = degeneracy_order(&g);
        for r in [1, 2, 4] {
            group.bench_with_input(BenchmarkId::new(format!("n{n}"), r), &r, |b, &r| {
                b.iter(|| eval_wcol(&g, &order, black_box(r)).unwrap())
            });
        }
    }
    group.finish();
}

fn admissibility(c: &mut Criterion) {
    let g = sparse_graph(300, 4.0, 2);
    let order = degeneracy_order(&g);
    c.bench_function("eval_adm/n300/r2", |b| b.iter(|| eval_adm(&g, &order, black_box(2)).unwrap()));
}

fn layer_profile(c: &mut Criterion) {
    let g = robertson();
    let order = degeneracy_order(&g);
    c.bench_function("profile/robertson/r4", |b| b.iter(|| profile(&g, &order, black_box(4)).unwrap()));
}

criterion_group!(benches, weak_reach, admissibility, layer_profile);
criterion_main!(benches);
