//! Benchmarks of the hot paths: full verification of a catalog instance,
//! tower reversal, and a small parameter scan.

use std::collections::BTreeMap;

use criterion::{criterion_group, criterion_main, Criterion};

use towerlab_core::catalog::{instantiate, scan, verify};
use towerlab_core::cone::Tower;

fn params(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn bench_verify(c: &mut Criterion) {
    let ce2 = instantiate("cE2", &BTreeMap::new()).unwrap();
    c.bench_function("verify cE2", |b| b.iter(|| verify(std::hint::black_box(&ce2))));

    let cd2 = instantiate("cD2-a4-case1", &params(&[("l", 3)])).unwrap();
    c.bench_function("verify cD2-a4-case1 l=3", |b| {
        b.iter(|| verify(std::hint::black_box(&cd2)))
    });
}

fn bench_reverse(c: &mut Criterion) {
    let i = instantiate("cD2-a4-case1", &params(&[("l", 3)])).unwrap();
    let tower = Tower::new(i.lattice.clone(), i.v1.clone(), i.chart, i.v2.clone()).unwrap();
    c.bench_function("reverse tower (dim 5)", |b| {
        b.iter(|| std::hint::black_box(&tower).reverse().unwrap())
    });
}

fn bench_scan(c: &mut Criterion) {
    let ranges: BTreeMap<String, (i64, i64)> = [("l".to_string(), (1i64, 10i64))].into();
    c.bench_function("scan cD2-d1-case1 l=1..10", |b| {
        b.iter(|| scan("cD2-d1-case1", std::hint::black_box(&ranges), 1).unwrap())
    });
}

criterion_group!(benches, bench_verify, bench_reverse, bench_scan);
criterion_main!(benches);
