//! Benchmarks for the preparation pipeline and the chain embedder.

use criterion::{criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ramsey_core::machinery::prepare_host;
use ramsey_core::pairs::{allocate_chunks, chain_path_embed};
use ramsey_core::synth;

fn bench_prepare(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let (even, _) = synth::bipartite_chorded_cycle(1000, 20, &mut rng);
    let (odd, _) = synth::indexed_chorded_cycle(1001, 3, 15, &mut rng);
    c.bench_function("prepare_even_1000", |b| {
        b.iter(|| prepare_host(&even, 6, 4).unwrap())
    });
    c.bench_function("prepare_odd_1001", |b| {
        b.iter(|| prepare_host(&odd, 6, 4).unwrap())
    });
}

fn bench_chain(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let eps = 0.004;
    let chain = synth::cluster_chain(6, 200, 0.5, &mut rng);
    let lengths = [19usize, 21, 19];
    let specs = synth::anchored_specs(&chain, &lengths, eps);
    let alloc = allocate_chunks(&lengths, 6, 200, eps).unwrap();
    let mut group = c.benchmark_group("chain");
    group.sample_size(30);
    group.bench_function("embed_3_paths_ell6", |b| {
        b.iter(|| chain_path_embed(&chain, &specs, &alloc, eps).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_prepare, bench_chain);
criterion_main!(benches);
