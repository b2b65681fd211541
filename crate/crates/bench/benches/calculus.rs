use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use window_calculus::bwb::{bwb, GrWeight};
use window_calculus::lascoux::resolution_terms;
use window_calculus::rickard::{cancellation_matching, poincare_centered};
use window_calculus::tensorcalc::lr_coefficients;
use window_calculus::weights::DominantWeight;

fn w(entries: &[i64]) -> DominantWeight {
    DominantWeight::new(entries.to_vec()).unwrap()
}

fn bench_poincare(c: &mut Criterion) {
    c.bench_function("poincare_centered_2_4", |b| {
        b.iter(|| poincare_centered(black_box(2), black_box(4)).unwrap())
    });
}

fn bench_lr(c: &mut Criterion) {
    let lambda = w(&[3, 1, 0]);
    let mu = w(&[2, 1, -1]);
    c.bench_function("lr_coefficients_rank3", |b| {
        b.iter(|| lr_coefficients(black_box(&lambda), black_box(&mu), 3).unwrap())
    });
}

fn bench_bwb(c: &mut Criterion) {
    let gw = GrWeight::new(2, 4, w(&[1, -2]), w(&[3, 0])).unwrap();
    c.bench_function("bwb_gr_2_4", |b| b.iter(|| bwb(black_box(&gw))));
}

fn bench_cancellation(c: &mut Criterion) {
    c.bench_function("cancellation_matching_8", |b| {
        b.iter(|| cancellation_matching(black_box(8)).unwrap())
    });
}

fn bench_resolution(c: &mut Criterion) {
    c.bench_function("resolution_terms_k2_i1", |b| {
        b.iter(|| resolution_terms(black_box(2), black_box(1)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_poincare,
    bench_lr,
    bench_bwb,
    bench_cancellation,
    bench_resolution
);
criterion_main!(benches);
