use std::fmt;
use std::hint::black_box;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::AlphabetMode;
use crate::analysis::{Cracker, LATIN_KEY_SPACE};
use crate::cipher::LatinCipher;
use crate::classic::{
    caesar_decipher, caesar_encipher, playfair_decipher, playfair_encipher, vigenere_decipher,
    vigenere_encipher, CaesarKey, PlayfairMatrix, VigenereKey, CAESAR_KEY_SPACE,
    PLAYFAIR_KEY_SPACE,
};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::key::{generate_key, LatinKey};

pub const DEFAULT_REPETITIONS: usize = 20;
pub const MIN_REPETITIONS: usize = 5;
pub const DEFAULT_BENCH_SEED: u64 = 0x1a7d_2023;

const VIGENERE_KEYWORD_LEN: usize = 5;
const PLAYFAIR_PHRASE_LEN: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CipherKind {
    LatinDjokovic,
    Caesar,
    Vigenere,
    Playfair,
}

impl CipherKind {
    pub const ALL: [CipherKind; 4] = [
        CipherKind::LatinDjokovic,
        CipherKind::Caesar,
        CipherKind::Vigenere,
        CipherKind::Playfair,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            CipherKind::LatinDjokovic => "latin-djokovic",
            CipherKind::Caesar => "caesar",
            CipherKind::Vigenere => "vigenere",
            CipherKind::Playfair => "playfair",
        }
    }

    /// Whether the harness includes a brute-force crack for this cipher.
    pub const fn crackable(self) -> bool {
        matches!(self, CipherKind::LatinDjokovic | CipherKind::Caesar)
    }

    /// Length-preserving substitution ciphers; Playfair is excluded.
    pub const fn preserves_length(self) -> bool {
        !matches!(self, CipherKind::Playfair)
    }
}

impl fmt::Display for CipherKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BenchOp {
    Encipher,
    Decipher,
    Crack,
}

impl BenchOp {
    pub const fn name(self) -> &'static str {
        match self {
            BenchOp::Encipher => "encipher",
            BenchOp::Decipher => "decipher",
            BenchOp::Crack => "crack",
        }
    }
}

impl fmt::Display for BenchOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One cipher x text x operation measurement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub cipher: CipherKind,
    pub op: BenchOp,
    /// Plaintext length in characters.
    pub text_length: usize,
    /// Median wall time over the repetitions, at least 1.
    pub wall_time_ns: u64,
    pub ciphertext_size: usize,
    pub key_space_size: u128,
}

/// Fixed keys for every cipher, derived from one seed.
#[derive(Debug, Clone)]
pub struct BenchKeys {
    pub latin: LatinKey,
    pub caesar: CaesarKey,
    pub vigenere: VigenereKey,
    pub playfair: PlayfairMatrix,
}

impl BenchKeys {
    pub fn from_seed(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = rng.random_range(1..=10);
        let latin = generate_key(a, Some(rng.random()), AlphabetMode::CasePreserving)
            .expect("a is in range");
        let caesar = CaesarKey::new(rng.random_range(1..=25)).expect("shift is in range");
        let mut letters = |n: usize| -> String {
            (0..n)
                .map(|_| char::from(b'A' + rng.random_range(0..26u8)))
                .collect()
        };
        let vigenere = VigenereKey::new(&letters(VIGENERE_KEYWORD_LEN)).expect("letters only");
        let playfair = PlayfairMatrix::new(&letters(PLAYFAIR_PHRASE_LEN)).expect("has letters");
        BenchKeys {
            latin,
            caesar,
            vigenere,
            playfair,
        }
    }

    fn key_space(&self, cipher: CipherKind) -> u128 {
        match cipher {
            CipherKind::LatinDjokovic => u128::from(LATIN_KEY_SPACE),
            CipherKind::Caesar => u128::from(CAESAR_KEY_SPACE),
            CipherKind::Vigenere => 26u128.pow(self.vigenere.len() as u32),
            CipherKind::Playfair => PLAYFAIR_KEY_SPACE,
        }
    }

    fn latin_cipher(&self) -> LatinCipher {
        LatinCipher::new(self.latin).with_max_len(usize::MAX)
    }

    pub fn encipher(&self, cipher: CipherKind, text: &str) -> String {
        match cipher {
            CipherKind::LatinDjokovic => self.latin_cipher().encipher(text).expect("no length cap"),
            CipherKind::Caesar => caesar_encipher(text, self.caesar),
            CipherKind::Vigenere => vigenere_encipher(text, &self.vigenere),
            CipherKind::Playfair => playfair_encipher(text, &self.playfair),
        }
    }

    pub fn decipher(&self, cipher: CipherKind, ciphertext: &str) -> String {
        match cipher {
            CipherKind::LatinDjokovic => self
                .latin_cipher()
                .decipher(ciphertext)
                .expect("no length cap"),
            CipherKind::Caesar => caesar_decipher(ciphertext, self.caesar),
            CipherKind::Vigenere => vigenere_decipher(ciphertext, &self.vigenere),
            CipherKind::Playfair => {
                playfair_decipher(ciphertext, &self.playfair).expect("even length by construction")
            }
        }
    }
}

/// Harness settings.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub repetitions: usize,
    pub warmup: usize,
    pub seed: u64,
    /// `Parallel` measures records concurrently, one record per task.
    pub execution: Execution,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            repetitions: DEFAULT_REPETITIONS,
            warmup: 3,
            seed: DEFAULT_BENCH_SEED,
            execution: Execution::Sequential,
        }
    }
}

struct Task<'c> {
    cipher: CipherKind,
    op: BenchOp,
    text: &'c str,
    ciphertext: String,
}

impl BenchConfig {
    pub fn run(&self, corpus: &[String]) -> Result<Vec<BenchRecord>> {
        if self.repetitions < MIN_REPETITIONS {
            return Err(Error::TooFewRepetitions(self.repetitions));
        }
        if corpus.is_empty() {
            return Err(Error::EmptyCorpus);
        }
        let keys = BenchKeys::from_seed(self.seed);

        let mut tasks = Vec::new();
        for cipher in CipherKind::ALL {
            for text in corpus {
                let ciphertext = keys.encipher(cipher, text);
                let mut ops = vec![BenchOp::Encipher, BenchOp::Decipher];
                if cipher.crackable() {
                    ops.push(BenchOp::Crack);
                }
                for op in ops {
                    tasks.push(Task {
                        cipher,
                        op,
                        text,
                        ciphertext: ciphertext.clone(),
                    });
                }
            }
        }

        Ok(self.execution.map(&tasks, |task| self.measure(&keys, task)))
    }

    fn measure(&self, keys: &BenchKeys, task: &Task<'_>) -> BenchRecord {
        let cracker = Cracker::default().with_execution(Execution::Sequential);
        let mut key_space_size = keys.key_space(task.cipher);
        let mut run = || match task.op {
            BenchOp::Encipher => {
                black_box(keys.encipher(task.cipher, black_box(task.text)));
            }
            BenchOp::Decipher => {
                black_box(keys.decipher(task.cipher, black_box(&task.ciphertext)));
            }
            BenchOp::Crack => {
                let size = match task.cipher {
                    CipherKind::LatinDjokovic => cracker
                        .crack_latin(black_box(&task.ciphertext), keys.latin.mode())
                        .map(|r| r.key_space_size()),
                    _ => cracker
                        .crack_caesar(black_box(&task.ciphertext))
                        .map(|r| r.key_space_size()),
                };
                if let Ok(size) = size {
                    key_space_size = u128::from(size);
                }
            }
        };
        for _ in 0..self.warmup {
            run();
        }
        let mut samples: Vec<u64> = (0..self.repetitions)
            .map(|_| {
                let start = Instant::now();
                run();
                start.elapsed().as_nanos() as u64
            })
            .collect();
        samples.sort_unstable();
        BenchRecord {
            cipher: task.cipher,
            op: task.op,
            text_length: task.text.chars().count(),
            wall_time_ns: samples[samples.len() / 2].max(1),
            ciphertext_size: task.ciphertext.len(),
            key_space_size,
        }
    }
}

/// Runs the harness with default settings and the given repetition count.
pub fn run_benchmarks(corpus: &[String], repetitions: usize) -> Result<Vec<BenchRecord>> {
    BenchConfig {
        repetitions,
        ..BenchConfig::default()
    }
    .run(corpus)
}
