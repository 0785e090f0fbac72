use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use knoedel_bench::{kernel_series, theorem1_grid};
use knoedel_core::closed_form::{girard_waring_power_sum, t_series, theorem1_coeff, theorem2_coeff};
use knoedel_core::{binom_general, TruncatedSeries};

fn binomials(c: &mut Criterion) {
    c.bench_function("binom_general negative upper", |b| {
        b.iter(|| {
            (0..40i64).fold(0usize, |acc, k| acc + binom_general(black_box(k - 62), black_box(k)).numer().bits() as usize)
        })
    });
}

fn series_ops(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    for order in [16usize, 32, 64] {
        let t = t_series(order);
        let one_minus_t = &TruncatedSeries::one(order) - &t;
        group.bench_with_input(BenchmarkId::new("mul", order), &order, |b, _| b.iter(|| &t * &one_minus_t));
        group.bench_with_input(BenchmarkId::new("recip", order), &order, |b, _| {
            b.iter(|| one_minus_t.recip().unwrap())
        });
        let x = kernel_series(order);
        group.bench_with_input(BenchmarkId::new("compose", order), &order, |b, _| {
            b.iter(|| x.compose(&t).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("reversion", order), &order, |b, _| {
            b.iter(|| x.reversion().unwrap())
        });
    }
    group.finish();
}

fn coefficient_formulas(c: &mut Criterion) {
    let grid = theorem1_grid(30);
    c.bench_function("double-large grid n<=30", |b| {
        b.iter(|| grid.iter().map(|&(n, j)| theorem1_coeff(n, j)).count())
    });
    c.bench_function("double-small grid n<=30", |b| {
        b.iter(|| {
            (1..=30usize)
                .flat_map(|n| (1..=n).map(move |j| (n, j)))
                .map(|(n, j)| theorem2_coeff(n, j))
                .count()
        })
    });
    c.bench_function("girard-waring m=40", |b| b.iter(|| girard_waring_power_sum(black_box(40))));
}

criterion_group!(benches, binomials, series_ops, coefficient_formulas);
criterion_main!(benches);
