use aalkit_core::casebook::{build_a_alpha_kappa, kappa_logic, or_logic, or_matrices};
use aalkit_core::congruence::{leibniz_congruence, suszko_congruence};
use aalkit_core::constructions::{default_snapshot, non_indexed_product};
use aalkit_core::interp::{search_interpretation, InterpretationMode};
use aalkit_core::logic::enumerate_filters;
use aalkit_core::Signature;
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn leibniz(c: &mut Criterion) {
    let ms = or_matrices();
    let sigs: Vec<Signature> = ms.iter().map(|m| m.signature().clone()).collect();
    let square = non_indexed_product(&ms, &default_snapshot(&sigs, None).unwrap())
        .unwrap()
        .matrix;
    let mut g = c.benchmark_group("leibniz");
    g.bench_function("A_c", |b| b.iter(|| leibniz_congruence(black_box(&ms[1]))));
    g.bench_function("A_top x A_c", |b| b.iter(|| leibniz_congruence(black_box(&square))));
    g.finish();
}

fn filters(c: &mut Criterion) {
    let or = or_logic();
    let kappa = kappa_logic(3).unwrap();
    let alg = build_a_alpha_kappa(0, 3).unwrap();
    let a_c = &or_matrices()[1];
    let mut g = c.benchmark_group("filters");
    g.bench_function("enumerate or on A", |b| {
        b.iter(|| enumerate_filters(&or, black_box(a_c.algebra())).unwrap())
    });
    g.bench_function("enumerate kappa3 on A_0_3", |b| {
        b.iter(|| enumerate_filters(&kappa, black_box(&alg)).unwrap())
    });
    g.bench_function("suszko or on A_c", |b| {
        b.iter(|| suszko_congruence(&or, black_box(a_c)).unwrap())
    });
    g.finish();
}

fn search(c: &mut Criterion) {
    let or = or_logic();
    let kappa = kappa_logic(3).unwrap();
    let mut g = c.benchmark_group("search");
    g.sample_size(10);
    g.bench_function("or into kappa3, depth 1", |b| {
        b.iter(|| {
            search_interpretation(&or, &kappa, 1, InterpretationMode::Generators, None)
                .unwrap()
                .found
                .is_some()
        })
    });
    g.finish();
}

criterion_group!(benches, leibniz, filters, search);
criterion_main!(benches);
