use criterion::{black_box, criterion_group, criterion_main, Criterion};
use phasecov_core::dynamics::{evolve, Rate, RateSchedule, DEFAULT_TOL};

fn bench_evolve(c: &mut Criterion) {
    let constant = RateSchedule::constant(1.0, 0.5, 0.2);
    let varying = RateSchedule::new(
        Rate::DampedCosine { a: 1.0, omega: 2.0 },
        Rate::Exp { a: -0.4, b: 0.5 },
        Rate::Piecewise {
            breakpoints: vec![0.0, 0.5, 2.0],
            values: vec![0.3, -0.6, 1.0],
        },
    );
    c.bench_function("evolve_constant_101", |b| {
        b.iter(|| evolve(black_box(&constant), 5.0, 101, DEFAULT_TOL).unwrap())
    });
    c.bench_function("evolve_varying_101", |b| {
        b.iter(|| evolve(black_box(&varying), 5.0, 101, DEFAULT_TOL).unwrap())
    });
}

criterion_group!(benches, bench_evolve);
criterion_main!(benches);
