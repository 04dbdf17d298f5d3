//! English-likeness scoring.
//!
//! The score is Pearson's chi-squared of the letter counts against reference
//! monogram frequencies, plus a bigram penalty: every adjacent letter pair
//! `xy` adds `max(0, -ln(P(xy) / (P(x) P(y))))`, so only pairs rarer than
//! chance count against a text. Lower is more English-like.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

const ENGLISH_MONOGRAMS: &str = include_str!("../../data/english_freq.txt");
const ENGLISH_BIGRAMS: &str = include_str!("../../data/english_bigrams.txt");

/// Lower is more English-like; texts without letters score `+inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitnessScore(f64);

impl FitnessScore {
    pub const WORST: FitnessScore = FitnessScore(f64::INFINITY);

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_worst(self) -> bool {
        self.0 == f64::INFINITY
    }
}

impl Eq for FitnessScore {}

impl PartialOrd for FitnessScore {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FitnessScore {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Display for FitnessScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_worst() {
            f.write_str("inf")
        } else {
            write!(f, "{:.4}", self.0)
        }
    }
}

#[inline]
fn letter_index(b: u8) -> Option<usize> {
    b.is_ascii_alphabetic()
        .then(|| usize::from(b.to_ascii_uppercase() - b'A'))
}

fn table_error(line: usize, msg: impl fmt::Display) -> Error {
    Error::FrequencyTable(format!("line {line}: {msg}"))
}

/// Relative monogram frequencies for `A..Z`, normalized to sum to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyTable {
    expected: [f64; 26],
}

impl FrequencyTable {
    /// The bundled English table (`data/english_freq.txt`).
    pub fn english() -> &'static FrequencyTable {
        static TABLE: OnceLock<FrequencyTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            ENGLISH_MONOGRAMS
                .parse()
                .expect("bundled frequency table is well formed")
        })
    }

    pub fn frequency(&self, letter: char) -> Option<f64> {
        u8::try_from(letter)
            .ok()
            .and_then(letter_index)
            .map(|i| self.expected[i])
    }

    /// Chi-squared statistic of the letter counts of `text`; `None` when the
    /// text has no letters.
    pub fn chi_squared(&self, text: &str) -> Option<f64> {
        let mut counts = [0u32; 26];
        let mut total = 0u32;
        for i in text.bytes().filter_map(letter_index) {
            counts[i] += 1;
            total += 1;
        }
        if total == 0 {
            return None;
        }
        let n = f64::from(total);
        let chi = counts
            .iter()
            .zip(&self.expected)
            .map(|(&observed, &p)| {
                let expected = n * p;
                let diff = f64::from(observed) - expected;
                diff * diff / expected
            })
            .sum();
        Some(chi)
    }
}

impl FromStr for FrequencyTable {
    type Err = Error;

    /// Parses 26 lines of `<letter> <relative frequency>`, one per letter.
    fn from_str(s: &str) -> Result<Self> {
        let mut expected = [f64::NAN; 26];
        let mut lines = 0;
        for (n, line) in s.lines().enumerate().map(|(n, l)| (n + 1, l.trim())) {
            if line.is_empty() {
                continue;
            }
            lines += 1;
            let mut parts = line.split_whitespace();
            let (Some(letter), Some(freq), None) = (parts.next(), parts.next(), parts.next())
            else {
                return Err(table_error(n, "expected `<letter> <frequency>`"));
            };
            let idx = match letter.as_bytes() {
                [b] => letter_index(*b),
                _ => None,
            }
            .ok_or_else(|| table_error(n, format!("`{letter}` is not a letter")))?;
            let freq: f64 = freq
                .parse()
                .map_err(|_| table_error(n, format!("bad frequency `{freq}`")))?;
            if !(freq.is_finite() && freq > 0.0) {
                return Err(table_error(n, "frequency must be positive"));
            }
            if !expected[idx].is_nan() {
                return Err(table_error(n, format!("duplicate letter {letter}")));
            }
            expected[idx] = freq;
        }
        if lines != 26 || expected.iter().any(|f| f.is_nan()) {
            return Err(Error::FrequencyTable(format!(
                "expected 26 letters, got {lines} lines"
            )));
        }
        let total: f64 = expected.iter().sum();
        expected.iter_mut().for_each(|f| *f /= total);
        Ok(FrequencyTable { expected })
    }
}

/// Raw letter-pair counts; add-one smoothed when turned into probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct BigramTable {
    counts: Box<[[u64; 26]; 26]>,
}

impl BigramTable {
    /// The bundled English table (`data/english_bigrams.txt`).
    pub fn english() -> &'static BigramTable {
        static TABLE: OnceLock<BigramTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            ENGLISH_BIGRAMS
                .parse()
                .expect("bundled bigram table is well formed")
        })
    }

    fn probabilities(&self) -> [[f64; 26]; 26] {
        let total: f64 = self.counts.iter().flatten().map(|&c| c as f64 + 1.0).sum();
        self.counts.map(|row| row.map(|c| (c as f64 + 1.0) / total))
    }
}

impl FromStr for BigramTable {
    type Err = Error;

    /// Parses 676 lines of `<two letters> <count>`, one per pair.
    fn from_str(s: &str) -> Result<Self> {
        let mut counts = Box::new([[0u64; 26]; 26]);
        let mut seen = [[false; 26]; 26];
        let mut lines = 0;
        for (n, line) in s.lines().enumerate().map(|(n, l)| (n + 1, l.trim())) {
            if line.is_empty() {
                continue;
            }
            lines += 1;
            let mut parts = line.split_whitespace();
            let (Some(pair), Some(count), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(table_error(n, "expected `<pair> <count>`"));
            };
            let (x, y) = match pair.as_bytes() {
                [x, y] => (letter_index(*x), letter_index(*y)),
                _ => (None, None),
            };
            let (Some(x), Some(y)) = (x, y) else {
                return Err(table_error(n, format!("`{pair}` is not a letter pair")));
            };
            let count: u64 = count
                .parse()
                .map_err(|_| table_error(n, format!("bad count `{count}`")))?;
            if std::mem::replace(&mut seen[x][y], true) {
                return Err(table_error(n, format!("duplicate pair {pair}")));
            }
            counts[x][y] = count;
        }
        if lines != 676 {
            return Err(Error::FrequencyTable(format!(
                "expected 676 letter pairs, got {lines} lines"
            )));
        }
        Ok(BigramTable { counts })
    }
}

/// Scores texts against a monogram table and, optionally, a bigram table.
#[derive(Debug, Clone, PartialEq)]
pub struct Scorer {
    monograms: FrequencyTable,
    // per-pair penalty max(0, -ln(P(xy) / (P(x) P(y))))
    pair_penalty: Option<Box<[[f64; 26]; 26]>>,
}

impl Scorer {
    /// Bundled English monograms and bigrams.
    pub fn english() -> &'static Scorer {
        static SCORER: OnceLock<Scorer> = OnceLock::new();
        SCORER.get_or_init(|| {
            Scorer::new(
                FrequencyTable::english().clone(),
                Some(BigramTable::english()),
            )
        })
    }

    pub fn new(monograms: FrequencyTable, bigrams: Option<&BigramTable>) -> Self {
        let pair_penalty = bigrams.map(|table| {
            let p = table.probabilities();
            let m = &monograms.expected;
            Box::new(std::array::from_fn(|x| {
                std::array::from_fn(|y| (-(p[x][y] / (m[x] * m[y])).ln()).max(0.0))
            }))
        });
        Scorer {
            monograms,
            pair_penalty,
        }
    }

    /// Plain chi-squared, no bigram term.
    pub fn monogram_only(monograms: FrequencyTable) -> Self {
        Scorer::new(monograms, None)
    }

    pub fn monograms(&self) -> &FrequencyTable {
        &self.monograms
    }

    pub fn score(&self, text: &str) -> FitnessScore {
        let Some(chi) = self.monograms.chi_squared(text) else {
            return FitnessScore::WORST;
        };
        let penalty = self.pair_penalty.as_ref().map_or(0.0, |table| {
            text.as_bytes()
                .windows(2)
                .filter_map(|w| Some(table[letter_index(w[0])?][letter_index(w[1])?]))
                .sum()
        });
        FitnessScore(chi + penalty)
    }
}

/// Scores `text` with the bundled English [`Scorer`].
pub fn english_fitness(text: &str) -> FitnessScore {
    Scorer::english().score(text)
}
