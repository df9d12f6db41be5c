use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use charbasis::partition::{Composition, Partition};
use charbasis::stable::{product_h_st, product_ht_st, stable_kronecker_expansion};
use charbasis::symfunc::{character_inner_at, sn_character, BasisTag, SymExpr};
use charbasis::tableau::{lr_coefficient, LrMethod};

fn bench_products(c: &mut Criterion) {
    let lam = Partition::of(&[2, 2]);
    let alpha = Composition::of(&[2, 1]);
    c.bench_function("product_h_st 21x22", |b| {
        b.iter(|| product_h_st(black_box(&alpha), black_box(&lam)))
    });
    c.bench_function("product_ht_st 21x22", |b| {
        b.iter(|| product_ht_st(black_box(&alpha), black_box(&lam)))
    });
    c.bench_function("stable_kronecker 21x21", |b| {
        let mu = Partition::of(&[2, 1]);
        b.iter(|| stable_kronecker_expansion(black_box(&mu), black_box(&mu)))
    });
}

fn bench_lr(c: &mut Criterion) {
    let a = Partition::of(&[3, 2, 1]);
    let b2 = Partition::of(&[2, 2, 1]);
    let nu = Partition::of(&[4, 3, 2, 1, 1]);
    c.bench_function("lr lattice-pair 321x221", |b| {
        b.iter(|| lr_coefficient(black_box(&a), black_box(&b2), black_box(&nu), LrMethod::LatticePair))
    });
    c.bench_function("lr jdt 321x221", |b| {
        b.iter(|| lr_coefficient(black_box(&a), black_box(&b2), black_box(&nu), LrMethod::Jdt))
    });
}

fn bench_characters(c: &mut Criterion) {
    c.bench_function("character table n=10", |b| {
        b.iter(|| {
            let mut total = 0i64;
            for lam in charbasis::partition::partitions_of(10) {
                for mu in charbasis::partition::partitions_of(10) {
                    total += sn_character(black_box(&lam), black_box(&mu)).unwrap();
                }
            }
            total
        })
    });
    c.bench_function("character inner st21 at n=12", |b| {
        let f = SymExpr::atom(BasisTag::St, Partition::of(&[2, 1]));
        b.iter(|| character_inner_at(black_box(&f), black_box(&f), 12))
    });
}

criterion_group!(benches, bench_products, bench_lr, bench_characters);
criterion_main!(benches);
