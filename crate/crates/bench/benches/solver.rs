use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use powersum_bench::{fast_cases, quiet, step_fixture, wide_equation_text};
use powersum_core::solver::step;
use powersum_core::{enumerate_solutions, parse_equation, solve, suite};

fn bench_solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    group.sample_size(20);
    for case in fast_cases() {
        group.bench_with_input(
            BenchmarkId::from_parameter(&case.name),
            &case.equation,
            |b, eq| {
                let mut seed = 0;
                b.iter(|| {
                    seed += 1;
                    black_box(solve(eq, &quiet(seed)).unwrap())
                });
            },
        );
    }
    group.finish();
}

fn bench_step(c: &mut Criterion) {
    const STEPS: u64 = 10_000;
    let (eq, start) = step_fixture();
    let mut group = c.benchmark_group("step");
    group.throughput(Throughput::Elements(STEPS));
    group.bench_function("squares_4000", |b| {
        b.iter(|| {
            let mut state = start.clone();
            for _ in 0..STEPS {
                black_box(step(&eq, &mut state).unwrap());
                if state.solved {
                    break;
                }
            }
            state
        });
    });
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    for case in suite::table1()
        .iter()
        .take(5)
        .chain(suite::table2().iter().take(3))
    {
        group.bench_with_input(
            BenchmarkId::from_parameter(&case.name),
            &case.equation,
            |b, eq| {
                b.iter(|| black_box(enumerate_solutions(eq, None).unwrap()));
            },
        );
    }
    group.finish();
}

fn bench_parse(c: &mut Criterion) {
    let text = wide_equation_text();
    c.bench_function("parse/ten_terms", |b| {
        b.iter(|| black_box(parse_equation(black_box(&text)).unwrap()));
    });
}

criterion_group!(benches, bench_solve, bench_step, bench_oracle, bench_parse);
criterion_main!(benches);
