use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use pbasic::basicsets::{construct_alt_basic, construct_sym_basic, verify_c_basic, verify_isometry_in};
use pbasic::decomp::{wedge_shape, LabeledIntMatrix};
use pbasic::symchar::{p_blocks, sym_table};
use pbasic::wreath::{base_group_n, wreath_table};

fn basic_sets(c: &mut Criterion) {
    c.bench_function("verify sym basic set n=10 p=3", |b| {
        b.iter(|| verify_c_basic(&construct_sym_basic(black_box(10), 3).unwrap(), None).unwrap().holds)
    });
    c.bench_function("verify alt basic set n=9 p=3", |b| {
        b.iter(|| verify_c_basic(&construct_alt_basic(black_box(9), 3).unwrap(), None).unwrap().holds)
    });
}

fn isometry(c: &mut Criterion) {
    let sym = sym_table(9);
    let wreath = wreath_table(&base_group_n(3).unwrap(), 3);
    let block = p_blocks(9, 3).into_iter().find(|b| b.weight == 3).unwrap();
    c.bench_function("isometry weight 3 block of S9", |b| {
        b.iter(|| verify_isometry_in(&block, &sym, &wreath).unwrap().verdict)
    });
}

fn wedge(c: &mut Criterion) {
    let m = LabeledIntMatrix::parse(include_str!("../../core/fixtures/s6_p3.mat")).unwrap();
    c.bench_function("wedge refusal on S6 fixture", |b| b.iter(|| wedge_shape(black_box(&m)).is_none()));
}

criterion_group!(benches, basic_sets, isometry, wedge);
criterion_main!(benches);
