use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use afm_bench::{bench_field, bench_map};
use afm_core::{
    build_line_proposal_map, compute_attraction_field, evaluate, size_denormalize,
    size_normalize, squeeze, stretch, unstretch, SqueezeParams,
};

fn encode(c: &mut Criterion) {
    let map = bench_map();
    c.bench_function("encode_320", |b| {
        b.iter(|| compute_attraction_field(black_box(&map)).unwrap())
    });
}

fn proposal(c: &mut Criterion) {
    let map = bench_map();
    let afm = bench_field(&map);
    c.bench_function("proposal_map_320", |b| {
        b.iter(|| build_line_proposal_map(black_box(&afm)).unwrap())
    });
}

fn squeeze_decode(c: &mut Criterion) {
    let map = bench_map();
    let afm = bench_field(&map);
    let params = SqueezeParams::default();
    let mut group = c.benchmark_group("squeeze");
    group.sample_size(20);
    group.bench_function("squeeze_320", |b| {
        b.iter(|| squeeze(black_box(&afm), black_box(&params)).unwrap())
    });
    group.finish();
}

fn transforms_round_trip(c: &mut Criterion) {
    let map = bench_map();
    let afm = bench_field(&map);
    c.bench_function("transforms_round_trip_320", |b| {
        b.iter(|| {
            let n = size_normalize(black_box(&afm)).unwrap();
            let (s, _) = stretch(&n).unwrap();
            size_denormalize(&unstretch(&s).unwrap()).unwrap()
        })
    });
}

fn score(c: &mut Criterion) {
    let map = bench_map();
    let afm = bench_field(&map);
    let out = squeeze(&afm, &SqueezeParams::default()).unwrap();
    c.bench_function("evaluate_320", |b| {
        b.iter(|| evaluate(black_box(&out.segments), black_box(&map), 0.01).unwrap())
    });
}

criterion_group!(
    benches,
    encode,
    proposal,
    squeeze_decode,
    transforms_round_trip,
    score
);
criterion_main!(benches);
