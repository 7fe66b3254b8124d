//! Sequential versus pooled execution of the acceptance sweeps and of a
//! batch of independent polynomial builds.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use jack_core::combinatorics::compositions_up_to;
use jack_core::jack::build_e;
use jack_core::parallel::{par_map, seq_map, with_jobs};
use jack_core::verify::{run, VerifyConfig};

fn verify_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify-acceptance");
    group.sample_size(10);
    for (label, jobs) in [("sequential", Some(1)), ("pool", None)] {
        group.bench_with_input(BenchmarkId::from_parameter(label), &jobs, |b, &jobs| {
            b.iter(|| {
                let mut config = VerifyConfig::acceptance();
                config.jobs = jobs;
                black_box(run(config).passed())
            })
        });
    }
    group.finish();
}

fn build_batch(c: &mut Criterion) {
    let etas = compositions_up_to(5, 3);
    let mut group = c.benchmark_group("build-E-N3-deg5");
    group.sample_size(10);
    group.bench_function("seq_map", |b| b.iter(|| black_box(seq_map(&etas, build_e).len())));
    group.bench_function("par_map", |b| {
        b.iter(|| black_box(with_jobs(None, || par_map(&etas, build_e).len())))
    });
    group.finish();
}

criterion_group!(benches, verify_sweep, build_batch);
criterion_main!(benches);
