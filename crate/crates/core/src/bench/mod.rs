//! Execution-time and storage comparison of the four ciphers.

mod corpus;
mod report;
mod runner;

pub use corpus::{generate_corpus, DEFAULT_LENGTHS};
pub use report::{emit_report, ReportFormat, CSV_HEADER};
pub use runner::{
    run_benchmarks, BenchConfig, BenchKeys, BenchOp, BenchRecord, CipherKind, DEFAULT_BENCH_SEED,
    DEFAULT_REPETITIONS, MIN_REPETITIONS,
};
