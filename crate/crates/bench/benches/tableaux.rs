use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use symtab_core::symfunc::{cauchy_product_truncated, cauchy_rhs_c};
use symtab_core::{berele_insert, enumerate_ssot, rsk_c, KingTableau, Letter, Partition, TwoLineArray, Word};

fn insertion(c: &mut Criterion) {
    let t = KingTableau::from_signed(&[vec![1, 2, 4], vec![-2, -2, 6], vec![3, -4], vec![5]]).unwrap();
    c.bench_function("berele_insert cancellation", |b| b.iter(|| berele_insert(black_box(&t), Letter::barred(1))));
    let top: Vec<u32> = (1..=40).map(|i| (i + 3) / 4).collect();
    let bottom: Vec<i64> = (0..40).map(|i| [1, -2, 3, -1, 2, -3][i % 6]).collect();
    let mut pairs: Vec<(u32, Letter)> =
        top.iter().zip(&bottom).map(|(&u, &v)| (u, Letter::from_signed(v).unwrap())).collect();
    pairs.sort();
    let array = TwoLineArray::new(pairs).unwrap();
    c.bench_function("rsk_c 40 columns", |b| b.iter(|| rsk_c(black_box(&array))));
    let word = Word::from_signed(&bottom).unwrap();
    c.bench_function("rs_c 40 letters", |b| b.iter(|| symtab_core::rs_c(black_box(&word))));
}

fn enumeration(c: &mut Criterion) {
    let shape = Partition::new(vec![2, 1]).unwrap();
    c.bench_function("enumerate_ssot k=3 n=7 (2,1)", |b| b.iter(|| enumerate_ssot(3, black_box(7), &shape)));
}

fn polynomials(c: &mut Criterion) {
    let mut group = c.benchmark_group("cauchy k=2 degree 4");
    group.sample_size(10);
    group.bench_function("product", |b| b.iter(|| cauchy_product_truncated(2, black_box(4))));
    group.bench_function("sp times ss", |b| b.iter(|| cauchy_rhs_c(2, black_box(4))));
    group.finish();
}

criterion_group!(benches, insertion, enumeration, polynomials);
criterion_main!(benches);
