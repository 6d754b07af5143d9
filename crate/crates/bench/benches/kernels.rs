use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use skewposet::lrrule::{count_syt_skew, decompose};
use skewposet::poset::{down_covers, reduce_to_staircase};
use skewposet::sequences::{all_box_pairs, barp_series};
use skewposet::verifier::{enumerate_basic, run_suite, Check, SweepConfig};
use skewposet::{decay, SkewDiagram};

fn lr_kernel(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose");
    for s in ["4,3,2,1/2,2", "5,4,3,2,1/4,3,2,1", "6,5,4,3,2,1/3,2,1", "5,5,4,3/3,2"] {
        let d: SkewDiagram = s.parse().unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(s), &d, |b, d| b.iter(|| decompose(black_box(d))));
    }
    group.finish();

    let d: SkewDiagram = "6,5,4,3,2,1/3,2,1".parse().unwrap();
    c.bench_function("count_syt_skew 6,5,4,3,2,1/3,2,1", |b| b.iter(|| count_syt_skew(black_box(&d))));
}

fn poset(c: &mut Criterion) {
    let class = decay(&"5,4,3,2,2/4,2,2,1".parse::<SkewDiagram>().unwrap());
    c.bench_function("down_covers", |b| b.iter(|| down_covers(black_box(&class))));
    c.bench_function("reduce_to_staircase", |b| b.iter(|| reduce_to_staircase(black_box(&class)).unwrap()));
}

fn sequences(c: &mut Criterion) {
    c.bench_function("all_box_pairs 15", |b| b.iter(|| all_box_pairs(black_box(15))));
    c.bench_function("barp_series 20", |b| b.iter(|| barp_series(black_box(20)).unwrap()));
}

fn sweep(c: &mut Criterion) {
    c.bench_function("enumerate_basic 8", |b| b.iter(|| enumerate_basic(black_box(8))));
    let mut group = c.benchmark_group("sweep 7 boxes");
    group.sample_size(10);
    for jobs in [1, 4] {
        let cfg = SweepConfig {
            max_boxes: 7,
            checks: vec![Check::LowerCc, Check::Pairs, Check::Upper, Check::Reduction],
            sample_seed: 0,
            samples: 0,
            parallel_jobs: jobs,
        };
        group.bench_with_input(BenchmarkId::new("jobs", jobs), &cfg, |b, cfg| b.iter(|| run_suite(cfg).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, lr_kernel, poset, sequences, sweep);
criterion_main!(benches);
