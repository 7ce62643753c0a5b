use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use semitrace::{ideal, shifted, threegen, NumericalSemigroup, ShiftParams};

fn bench_residue_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("residue");
    for a in [5i128, 20, 50] {
        let gens = [3, 3 * a + 1, 3 * a + 2];
        group.bench_with_input(BenchmarkId::new("trace", a), &gens, |bch, gens| {
            bch.iter(|| {
                let h = NumericalSemigroup::new(gens).unwrap();
                ideal::residue(&h).unwrap()
            })
        });
        group.bench_with_input(BenchmarkId::new("matrix", a), &gens, |bch, gens| {
            bch.iter(|| {
                let h = NumericalSemigroup::new(gens).unwrap();
                threegen::residue3(&h).unwrap()
            })
        });
    }
    group.finish();
}

fn bench_shift_scan(c: &mut Criterion) {
    c.bench_function("shift_scan_2_3", |b| {
        let p = ShiftParams::new(2, 3).unwrap();
        b.iter(|| shifted::scan(&p, 40).unwrap())
    });
}

fn bench_apery(c: &mut Criterion) {
    c.bench_function("apery_101", |b| {
        let h = NumericalSemigroup::new(&[101, 202 + 1, 303 + 2]).unwrap();
        b.iter(|| h.apery_set(101).unwrap())
    });
}

criterion_group!(benches, bench_residue_routes, bench_shift_scan, bench_apery);
criterion_main!(benches);
