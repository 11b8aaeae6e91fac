use chordal::promotion::orbit;
use chordal::sieving::{csp_check, f_poly};
use chordal::{chord_matrix, enumerate_zero, growth_matrix, ChordMap, Family, TableauSeq};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn fan() -> TableauSeq {
    TableauSeq::parse_compact(Family::Fan, 3, "000,111,222,311,422,331,222,111,000").unwrap()
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate fans r=2 n=8", |b| b.iter(|| enumerate_zero(Family::Fan, black_box(2), black_box(8))));
    c.bench_function("enumerate oscillating r=3 n=8", |b| {
        b.iter(|| enumerate_zero(Family::Oscillating, black_box(3), black_box(8)))
    });
}

fn matrices(c: &mut Criterion) {
    let t = fan();
    c.bench_function("promotion orbit of a fan", |b| b.iter(|| orbit(black_box(&t)).unwrap()));
    c.bench_function("chord matrix by promotion", |b| b.iter(|| chord_matrix(ChordMap::MF, black_box(&t)).unwrap()));
    c.bench_function("chord matrix by growth", |b| b.iter(|| growth_matrix(black_box(&t)).unwrap()));
}

fn sieving(c: &mut Criterion) {
    c.bench_function("energy polynomial fans r=2 n=8", |b| {
        b.iter(|| f_poly(Family::Fan, black_box(2), black_box(8)).unwrap())
    });
    let xs = enumerate_zero(Family::Fan, 2, 8);
    let f = f_poly(Family::Fan, 2, 8).unwrap();
    c.bench_function("sieving check fans r=2 n=8", |b| b.iter(|| csp_check(black_box(&xs), 8, &f).unwrap()));
}

criterion_group!(benches, enumeration, matrices, sieving);
criterion_main!(benches);
