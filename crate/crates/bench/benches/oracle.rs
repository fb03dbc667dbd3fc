use criterion::{criterion_group, criterion_main, Criterion};

use pcpath_core::generators::{gen_rainbow_complete, gen_recursive, gen_tilde};
use pcpath_core::oracle::{longest_pc_cycle, longest_pc_path};
use pcpath_core::yeo::certify_acyclic;

fn oracle(c: &mut Criterion) {
    let tilde = gen_tilde(3, 4).unwrap();
    let recursive = gen_recursive(3, 3, 3).unwrap();
    let k8 = gen_rainbow_complete(8);
    c.bench_function("path tilde(3,4)", |b| b.iter(|| longest_pc_path(&tilde, None).unwrap()));
    c.bench_function("path recursive(3,3,3)", |b| b.iter(|| longest_pc_path(&recursive, None).unwrap()));
    c.bench_function("path rainbow K8", |b| b.iter(|| longest_pc_path(&k8, None).unwrap()));
    c.bench_function("cycle recursive(3,3,3)", |b| b.iter(|| longest_pc_cycle(&recursive, None).unwrap()));
    c.bench_function("yeo recursive(3,3,3)", |b| b.iter(|| certify_acyclic(&recursive).unwrap()));
}

criterion_group!(benches, oracle);
criterion_main!(benches);
