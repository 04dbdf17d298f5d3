use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Latin Djokovic cipher toolkit.
#[derive(Debug, Parser)]
#[command(name = "latin-djokovic", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Draw a key and print its one-line serialization.
    Keygen(KeygenArgs),
    /// Encipher text with a key.
    Encrypt(TransformArgs),
    /// Decipher text with a key.
    Decrypt(TransformArgs),
    /// Brute-force a ciphertext and print the best candidates.
    Crack(CrackArgs),
    /// Time every cipher over a generated corpus.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Case,
    Unified52,
}

impl From<ModeArg> for latin_djokovic::AlphabetMode {
    fn from(mode: ModeArg) -> Self {
        match mode {
            ModeArg::Case => latin_djokovic::AlphabetMode::CasePreserving,
            ModeArg::Unified52 => latin_djokovic::AlphabetMode::Unified52,
        }
    }
}

#[derive(Debug, Args)]
pub struct KeygenArgs {
    /// Lower bound of the key range, 1..=47.
    #[arg(long, allow_negative_numbers = true)]
    pub a: i64,
    /// Seed for a reproducible key; OS entropy when absent.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value = "case")]
    pub mode: ModeArg,
}

/// Where the text comes from; standard input when neither flag is given.
#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct InputArgs {
    /// Text given inline.
    #[arg(long)]
    pub text: Option<String>,
    /// Read the text from a file.
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct KeyArgs {
    /// Key line, e.g. "latin-djokovic v1 a=1 k=3 mode=case".
    #[arg(long, env = "LATIN_DJOKOVIC_KEY", hide_env_values = true)]
    pub key: Option<String>,
    /// File holding the key line.
    #[arg(long, value_name = "PATH")]
    pub key_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub key: KeyArgs,
    /// Longest accepted text, in characters.
    #[arg(long, default_value_t = latin_djokovic::DEFAULT_MAX_LEN)]
    pub max_len: usize,
    /// Write the result here instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CipherArg {
    Latin,
    Caesar,
}

#[derive(Debug, Args)]
pub struct CrackArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "latin")]
    pub cipher: CipherArg,
    /// Number of candidates to print.
    #[arg(long, default_value_t = 5)]
    pub top: usize,
    /// Alphabet to assume for Latin Djokovic ciphertext.
    #[arg(long, value_enum, default_value = "case")]
    pub mode: ModeArg,
    /// Monogram table: 26 lines of `<letter> <frequency>`.
    #[arg(long, value_name = "PATH")]
    pub freq_table: Option<PathBuf>,
    /// Bigram table: 676 lines of `<pair> <count>`.
    #[arg(long, value_name = "PATH")]
    pub bigram_table: Option<PathBuf>,
    /// Characters of recovered plaintext to show per candidate.
    #[arg(long, default_value_t = 80)]
    pub preview: usize,
    /// Evaluate keys one at a time.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Corpus text lengths.
    #[arg(long, value_delimiter = ',', default_values_t = latin_djokovic::bench::DEFAULT_LENGTHS)]
    pub lengths: Vec<usize>,
    /// Timed repetitions per record (median reported), at least 5.
    #[arg(long, default_value_t = latin_djokovic::bench::DEFAULT_REPETITIONS)]
    pub reps: usize,
    /// `csv` or `table`.
    #[arg(long, default_value = "csv")]
    pub format: String,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Seed for the corpus and the benchmark keys.
    #[arg(long, default_value_t = latin_djokovic::bench::DEFAULT_BENCH_SEED)]
    pub seed: u64,
    /// Measure records concurrently.
    #[arg(long)]
    pub parallel: bool,
}
