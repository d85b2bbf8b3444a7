use criterion::{criterion_group, criterion_main, Criterion};
use heatcount_core::lie::{
    commutator_density, lie_heat_kernel, lie_n_commutator_density, mc_commutator_histogram, witten_zeta_partial, RootKind,
    RootSystemData, TorusPoint,
};
use std::hint::black_box;

fn series(c: &mut Criterion) {
    let a1 = RootSystemData::new(RootKind::A1);
    let a2 = RootSystemData::new(RootKind::A2);
    c.bench_function("zeta A1 s=2", |b| b.iter(|| witten_zeta_partial(&a1, black_box(2.0), 1e-8).unwrap()));
    c.bench_function("zeta A2 s=2", |b| b.iter(|| witten_zeta_partial(&a2, black_box(2.0), 1e-4).unwrap()));
    let x = TorusPoint::a1(1.2);
    c.bench_function("commutator density A1 g=2", |b| b.iter(|| commutator_density(&a1, black_box(&x), 2, 0.0, 1e-8).unwrap()));
    let y = TorusPoint::a2(1.0, 0.5);
    c.bench_function("heat kernel A2 t=0.1", |b| b.iter(|| lie_heat_kernel(&a2, black_box(&y), 0.1, 1e-10).unwrap()));
    c.bench_function("ncomm density A1 n=3", |b| b.iter(|| lie_n_commutator_density(&a1, 3, black_box(&x), 0.05, 256, 1e-5).unwrap()));
}

fn monte_carlo(c: &mut Criterion) {
    let mut g = c.benchmark_group("mc");
    g.sample_size(10);
    g.bench_function("commutator 1e5", |b| b.iter(|| mc_commutator_histogram(black_box(1), 100_000, 50).unwrap()));
    g.finish();
}

criterion_group!(benches, series, monte_carlo);
criterion_main!(benches);
