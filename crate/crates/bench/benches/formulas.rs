use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use quotcoh_core::bb_hilb2::hilb2_poincare_cells;
use quotcoh_core::bb_rcells::{r_circ_poincare, WeightAssignment};
use quotcoh_core::grassmann::gaussian_binomial;
use quotcoh_core::quot_formulas::{blowup_assemble, hilb2_series_closed, stable_quot2_series};

fn formulas(c: &mut Criterion) {
    c.bench_function("gaussian_binomial(40, 20)", |b| {
        b.iter(|| gaussian_binomial(black_box(40), black_box(20)))
    });
    c.bench_function("hilb2 closed form n=r=10", |b| {
        b.iter(|| hilb2_series_closed(black_box(10), black_box(10)))
    });
    c.bench_function("hilb2 cells n=r=10", |b| {
        b.iter(|| hilb2_poincare_cells(black_box(10), black_box(10)))
    });
    c.bench_function("blowup assembly n=r=10", |b| {
        b.iter(|| blowup_assemble(black_box(10), black_box(10)))
    });
    c.bench_function("stable quot2 series r=10 prec=200", |b| {
        b.iter(|| stable_quot2_series(black_box(10), black_box(200)))
    });
    let w = WeightAssignment::standard(4, 3);
    c.bench_function("R-locus cells r=4 m=2 s=3 n=3", |b| {
        b.iter(|| r_circ_poincare(black_box(4), black_box(2), black_box(3), black_box(3), &w))
    });
}

criterion_group!(benches, formulas);
criterion_main!(benches);
