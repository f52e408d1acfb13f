use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_rational::BigRational;

use coxgrowth::{
    fixture_graph, growth_rate, growth_series, minimality_report, parse_coxeter_symbol, solve_prism_length,
    symbol_to_graph, DEFAULT_PRECISION_BITS,
};

fn series(c: &mut Criterion) {
    let simplex = symbol_to_graph(&parse_coxeter_symbol("[5,3,3,3]").unwrap());
    let prism = fixture_graph("kaplinskaja");
    c.bench_function("growth_series/[5,3,3,3]", |b| b.iter(|| growth_series(black_box(&simplex)).unwrap()));
    c.bench_function("growth_series/kaplinskaja", |b| b.iter(|| growth_series(black_box(&prism)).unwrap()));
}

fn rate(c: &mut Criterion) {
    let eps = BigRational::new(1.into(), 1_000_000_000_000i64.into());
    for name in ["makarov", "kaplinskaja"] {
        let f = growth_series(&fixture_graph(name)).unwrap();
        c.bench_function(&format!("growth_rate/{name}"), |b| {
            b.iter(|| growth_rate(black_box(f.function()), &eps).unwrap())
        });
    }
}

fn geometry(c: &mut Criterion) {
    let g = fixture_graph("makarov");
    c.bench_function("solve_prism_length/makarov", |b| {
        b.iter(|| solve_prism_length(black_box(&g), 5, DEFAULT_PRECISION_BITS).unwrap())
    });
}

fn report(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimality_report");
    group.sample_size(10);
    group.bench_function("dim4", |b| b.iter(|| minimality_report(black_box(4)).unwrap()));
    group.finish();
}

criterion_group!(benches, series, rate, geometry, report);
criterion_main!(benches);
