use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use duplex_twist::verify::{run_suites, Suite};
use duplex_twist::{
    count_tilings, enumerate_tilings_parallel, p_derivative_at_one, p_polynomial, pretwist,
    project_sock, Direction,
};
use duplex_twist_bench::{all_tilings, rectangle};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for (w, h) in [(3, 3), (3, 4), (4, 4)] {
        let r = rectangle(w, h);
        let id = format!("{w}x{h}");
        group.bench_with_input(BenchmarkId::new("count", &id), &r, |b, r| {
            b.iter(|| count_tilings(black_box(r)))
        });
        group.bench_with_input(BenchmarkId::new("parallel-4", &id), &r, |b, r| {
            b.iter(|| enumerate_tilings_parallel(black_box(r), 4).len())
        });
    }
    group.finish();
}

fn twist(c: &mut Criterion) {
    let r = rectangle(3, 4);
    let tilings = all_tilings(&r);
    let mut group = c.benchmark_group("twist-3x4");
    group.sample_size(20);
    for u in Direction::POSITIVE {
        group.bench_function(format!("pretwist {u}"), |b| {
            b.iter(|| {
                tilings
                    .iter()
                    .map(|t| pretwist(t, u))
                    .sum::<duplex_twist::Quarter>()
            })
        });
    }
    group.bench_function("polynomial", |b| {
        b.iter(|| {
            tilings
                .iter()
                .map(|t| p_derivative_at_one(&p_polynomial(&project_sock(t))))
                .sum::<i64>()
        })
    });
    group.finish();
}

fn suites(c: &mut Criterion) {
    let r = rectangle(3, 3);
    let tilings = all_tilings(&r);
    let mut group = c.benchmark_group("suites-3x3");
    group.sample_size(10);
    for jobs in [1, 4] {
        group.bench_function(format!("all jobs={jobs}"), |b| {
            b.iter(|| run_suites(&r, &tilings, &Suite::ALL, jobs).passed())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, twist, suites);
criterion_main!(benches);
