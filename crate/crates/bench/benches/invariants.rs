use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use fatdual::{census, fat_signature_quiver, generic_element, positive_roots, Quiver, TriangularAlgebra, F2, F31};

fn roots(c: &mut Criterion) {
    let q = Quiver::named("e8").unwrap();
    c.bench_function("positive_roots e8", |b| b.iter(|| positive_roots(black_box(&q), 6).unwrap()));
}

fn generic(c: &mut Criterion) {
    let t = TriangularAlgebra::<F31>::named("kronecker").unwrap();
    c.bench_function("generic_element kronecker (3,3)", |b| {
        b.iter(|| generic_element(&t, black_box(&[3, 3]), 4, 1).unwrap())
    });
}

fn signatures(c: &mut Criterion) {
    let t2 = Quiver::named("t2").unwrap();
    let t3 = Quiver::named("t3").unwrap();
    c.bench_function("fat_signature t2 (6,4)", |b| {
        b.iter(|| fat_signature_quiver::<F31>(&t2, black_box(&[6, 4]), 1, 4).unwrap())
    });
    c.bench_function("fat_signature t3 (3,2,2)", |b| {
        b.iter(|| fat_signature_quiver::<F31>(&t3, black_box(&[3, 2, 2]), 1, 4).unwrap())
    });
}

fn censuses(c: &mut Criterion) {
    let t = TriangularAlgebra::<F2>::named("t2").unwrap();
    c.bench_function("census t2 (2,2) over F_2", |b| b.iter(|| census(&t, black_box(&[2, 2]), 1).unwrap()));
}

criterion_group!(benches, roots, generic, signatures, censuses);
criterion_main!(benches);
