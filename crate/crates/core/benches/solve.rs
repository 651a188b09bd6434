//! Compares the full solver on rayon's default pool against a single-thread
//! pool. The two configurations return bit-identical results; only wall
//! time differs.

use criterion::{criterion_group, criterion_main, Criterion};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use arbocut::blocker::solve_blocker;
use arbocut::graph::{ArcAttribute, Digraph};

fn random_instance(seed: u64, n: usize, m: usize) -> (Digraph, ArcAttribute, ArcAttribute) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // A random backbone from node 0 keeps the instance feasible.
    let mut pairs = Vec::new();
    for v in 1..n {
        pairs.push((rng.gen_range(0..v), v));
    }
    while pairs.len() < m {
        let t = rng.gen_range(0..n);
        let h = rng.gen_range(0..n);
        if t != h {
            pairs.push((t, h));
        }
    }
    let d = Digraph::new(n, &pairs).unwrap();
    let c = ArcAttribute::from_fn(&d, |_| rng.gen_range(0..5));
    let w = ArcAttribute::from_fn(&d, |_| rng.gen_range(1..6));
    (d, c, w)
}

fn bench_solver(crit: &mut Criterion) {
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    for (n, m) in [(20, 80), (40, 240)] {
        let (d, c, w) = random_instance(42 + n as u64, n, m);
        let expected = solve_blocker(&d, &c, &w, 0).unwrap();
        assert_eq!(
            single.install(|| solve_blocker(&d, &c, &w, 0).unwrap()),
            expected
        );
        let mut group = crit.benchmark_group(format!("solve_n{n}_m{m}"));
        group.sample_size(10);
        group.bench_function("default_pool", |b| {
            b.iter(|| solve_blocker(&d, &c, &w, 0).unwrap().value)
        });
        group.bench_function("single_thread", |b| {
            b.iter(|| single.install(|| solve_blocker(&d, &c, &w, 0).unwrap().value))
        });
        group.finish();
    }
}

criterion_group!(benches, bench_solver);
criterion_main!(benches);
