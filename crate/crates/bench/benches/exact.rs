use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use gencol::exact::{adm_exact, wcol_exact, ExactConfig};
use gencol::expansion::top_grad_bruteforce;
use gencol::graph::named::petersen;
use gencol_bench::random_graph;

fn solvers(c: &mut Criterion) {
    let cfg = ExactConfig::default();
    let g = random_graph(9, 0.4, 3);
    let mut group = c.benchmark_group("exact");
    group.sample_size(10);
    group.bench_function("wcol/n9/r2", |b| b.iter(|| wcol_exact(&g, black_box(2), &cfg).unwrap()));
    group.bench_function("adm/n9/r2", |b| b.iter(|| adm_exact(&g, black_box(2), &cfg).unwrap()));
    let p = petersen();
    group.bench_function("wcol/petersen/r1", |b| b.iter(|| wcol_exact(&p, black_box(1), &cfg).unwrap()));
    group.finish();
}

fn top_grad(c: &mut Criterion) {
    let g = random_graph(10, 0.3, 1);
    let mut group = c.benchmark_group("tgrad");
    group.sample_size(10);
    for r in [0, 1] {
        group.bench_function(format!("n10/r{r}"), |b| b.iter(|| top_grad_bruteforce(&g, black_box(r), u64::MAX).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, solvers, top_grad);
criterion_main!(benches);
