use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use latin_djokovic::analysis::Cracker;
use latin_djokovic::bench::{
    generate_corpus, BenchConfig, BenchKeys, CipherKind, DEFAULT_BENCH_SEED,
};
use latin_djokovic::{AlphabetMode, Execution};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn crack(c: &mut Criterion) {
    let keys = BenchKeys::from_seed(DEFAULT_BENCH_SEED);
    let mut group = c.benchmark_group("crack_latin");
    for len in [50, 100, 1000] {
        let text = generate_corpus(&[len], 3).unwrap().remove(0);
        let ct = keys.encipher(CipherKind::LatinDjokovic, &text);
        for (name, exec) in MODES {
            let cracker = Cracker::default().with_execution(exec);
            group.bench_with_input(BenchmarkId::new(name, len), &ct, |b, ct| {
                b.iter(|| cracker.crack_latin(black_box(ct), AlphabetMode::CasePreserving))
            });
        }
    }
    group.finish();

    let mut group = c.benchmark_group("crack_caesar");
    let text = generate_corpus(&[1000], 3).unwrap().remove(0);
    let ct = keys.encipher(CipherKind::Caesar, &text);
    for (name, exec) in MODES {
        let cracker = Cracker::default().with_execution(exec);
        group.bench_function(name, |b| b.iter(|| cracker.crack_caesar(black_box(&ct))));
    }
    group.finish();
}

fn ciphers(c: &mut Criterion) {
    let keys = BenchKeys::from_seed(DEFAULT_BENCH_SEED);
    let text = generate_corpus(&[100], 9).unwrap().remove(0);
    let mut group = c.benchmark_group("encipher_100");
    for cipher in CipherKind::ALL {
        group.bench_function(cipher.name(), |b| {
            b.iter(|| keys.encipher(cipher, black_box(&text)))
        });
    }
    group.finish();
}

fn harness(c: &mut Criterion) {
    let corpus = generate_corpus(&[10, 50, 100], 1).unwrap();
    let mut group = c.benchmark_group("harness_sweep");
    group.sample_size(10);
    for (name, exec) in MODES {
        let config = BenchConfig {
            repetitions: 5,
            warmup: 0,
            execution: exec,
            ..BenchConfig::default()
        };
        group.bench_function(name, |b| b.iter(|| config.run(black_box(&corpus)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, crack, ciphers, harness);
criterion_main!(benches);
