use criterion::{black_box, criterion_group, criterion_main, Criterion};

use entropic_bounds::analysis::{boundary_curve, minimize_conditional_sum, verify_proposition};
use entropic_bounds::bounds::all_bounds;
use entropic_bounds::scenario::conditional_sum;
use entropic_bounds::EntropyOrder;
use entropic_bounds_bench::scenario_grid;

fn bench_conditional_sum(c: &mut Criterion) {
    let scenarios = scenario_grid(24);
    c.bench_function("conditional_sum_grid", |b| {
        b.iter(|| {
            let mut acc = 0.0;
            for s in &scenarios {
                acc += conditional_sum(black_box(s));
            }
            acc
        })
    });
}

fn bench_all_bounds(c: &mut Criterion) {
    let scenarios = scenario_grid(12);
    c.bench_function("all_bounds_grid", |b| {
        b.iter(|| {
            let mut acc = 0.0;
            for s in &scenarios {
                acc += all_bounds(black_box(s)).unwrap().b_kpp;
            }
            acc
        })
    });
}

fn bench_minimize(c: &mut Criterion) {
    let order = EntropyOrder::shannon();
    c.bench_function("minimize_conditional_sum", |b| {
        b.iter(|| {
            minimize_conditional_sum(black_box(0.1), black_box(0.7), order, 1e-9)
                .unwrap()
                .min_value
        })
    });
}

fn bench_boundary_curve(c: &mut Criterion) {
    let order = EntropyOrder::shannon();
    let lambdas: Vec<f64> = (0..25).map(|i| i as f64 * 0.02).collect();
    c.bench_function("boundary_curve_q1", |b| {
        b.iter(|| boundary_curve(order, black_box(&lambdas)).unwrap().points.len())
    });
}

fn bench_proposition_sweep(c: &mut Criterion) {
    let grid: Vec<f64> = (0..=50).map(|i| i as f64 / 50.0).collect();
    c.bench_function("verify_proposition_51x51", |b| {
        b.iter(|| {
            verify_proposition(black_box(&grid), black_box(&grid), &[0.5, 1.0, 2.0, 4.0], 1e-10)
                .unwrap()
                .grid_min_gap
        })
    });
}

criterion_group!(
    benches,
    bench_conditional_sum,
    bench_all_bounds,
    bench_minimize,
    bench_boundary_curve,
    bench_proposition_sweep
);
criterion_main!(benches);
