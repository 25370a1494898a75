use criterion::{black_box, criterion_group, criterion_main, Criterion};
use samod_core::exchange::{exchange_partition, TupleSpace};
use samod_core::fixtures::fixture;
use samod_core::harness::{generate_instances, run_suite};
use samod_core::lattice::whole;
use samod_core::oracle::bfs_partition;

fn partition(c: &mut Criterion) {
    for name in ["NSAT(5)", "FREE(BOOL,3)", "PRODUCT(CHAIN(3),CHAIN(1))"] {
        let m = fixture(name).unwrap();
        let v = whole(&m);
        let pair = TupleSpace::new(vec![v, v]).unwrap();
        c.bench_function(&format!("union-find {name} pair"), |b| {
            b.iter(|| exchange_partition(black_box(&pair)).unwrap().class_count())
        });
        c.bench_function(&format!("bfs {name} pair"), |b| b.iter(|| bfs_partition(black_box(&pair)).len()));
    }
    let m = fixture("FREE(BOOL,2)").unwrap();
    let v = whole(&m);
    let triple = TupleSpace::new(vec![v, v, v]).unwrap();
    c.bench_function("union-find B2 triple", |b| b.iter(|| exchange_partition(black_box(&triple)).unwrap().class_count()));
}

fn suite(c: &mut Criterion) {
    let specs = generate_instances(42, 20);
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    g.bench_function("all theorems, 20 instances", |b| b.iter(|| run_suite("all", black_box(&specs)).unwrap().instances_run));
    g.finish();
}

criterion_group!(benches, partition, suite);
criterion_main!(benches);
