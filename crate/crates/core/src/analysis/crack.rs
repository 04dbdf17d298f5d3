use std::cmp::Ordering;

use crate::alphabet::AlphabetMode;
use crate::cipher::LatinCipher;
use crate::classic::{caesar_decipher, CaesarKey, CAESAR_KEY_SPACE};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::key::{LatinKey, MAX_A, MIN_A, RANGE_WIDTH};

use super::fitness::{FitnessScore, Scorer};

/// Size of the full Latin Djokovic key space: 47 values of `a` times 4 of `k_init`.
pub const LATIN_KEY_SPACE: u64 = (MAX_A - MIN_A + 1) as u64 * (RANGE_WIDTH as u64 + 1);

/// Every `(a, k_init)` with `a_min <= a <= a_max` and `k_init` in `[a, a + 3]`,
/// ordered by `a` then `k_init`.
pub fn enumerate_latin_keys(a_min: u32, a_max: u32, mode: AlphabetMode) -> Result<Vec<LatinKey>> {
    if !(MIN_A <= a_min && a_min <= a_max && a_max <= MAX_A) {
        return Err(Error::KeyEnumerationRange(a_min, a_max));
    }
    let keys = (a_min..=a_max)
        .flat_map(|a| (a..=a + RANGE_WIDTH).map(move |k| (a, k)))
        .map(|(a, k)| LatinKey::new(a, k, mode).expect("enumerated keys are in range"))
        .collect();
    Ok(keys)
}

/// One trial decryption.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate<K> {
    pub key: K,
    pub plaintext: String,
    pub score: FitnessScore,
}

/// Every candidate of an exhaustive search, best score first.
///
/// Distinct keys can decipher a given text identically, so success is judged
/// on plaintext rather than on the key tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrackReport<K> {
    candidates: Vec<Candidate<K>>,
    key_space_size: u64,
}

impl<K> CrackReport<K> {
    fn ranked(mut candidates: Vec<Candidate<K>>, key_order: impl Fn(&K, &K) -> Ordering) -> Self {
        candidates.sort_by(|x, y| {
            x.score
                .cmp(&y.score)
                .then_with(|| key_order(&x.key, &y.key))
        });
        let key_space_size = candidates.len() as u64;
        CrackReport {
            candidates,
            key_space_size,
        }
    }

    pub fn candidates(&self) -> &[Candidate<K>] {
        &self.candidates
    }

    pub fn best(&self) -> Option<&Candidate<K>> {
        self.candidates.first()
    }

    pub fn top(&self, n: usize) -> &[Candidate<K>] {
        &self.candidates[..n.min(self.candidates.len())]
    }

    pub fn key_space_size(&self) -> u64 {
        self.key_space_size
    }

    /// Zero-based rank of the first candidate that recovered `plaintext`.
    pub fn rank_of_plaintext(&self, plaintext: &str) -> Option<usize> {
        self.candidates
            .iter()
            .position(|c| c.plaintext == plaintext)
    }

    /// Keys grouped by identical recovered plaintext, in rank order.
    pub fn equivalence_classes(&self) -> Vec<(&str, Vec<&K>)> {
        let mut classes: Vec<(&str, Vec<&K>)> = Vec::new();
        for c in &self.candidates {
            match classes.iter_mut().find(|(p, _)| *p == c.plaintext) {
                Some((_, keys)) => keys.push(&c.key),
                None => classes.push((&c.plaintext, vec![&c.key])),
            }
        }
        classes
    }
}

/// Brute-force search configuration.
#[derive(Debug, Clone)]
pub struct Cracker<'t> {
    scorer: &'t Scorer,
    execution: Execution,
}

impl Default for Cracker<'static> {
    fn default() -> Self {
        Cracker {
            scorer: Scorer::english(),
            execution: Execution::default(),
        }
    }
}

impl<'t> Cracker<'t> {
    pub fn new(scorer: &'t Scorer, execution: Execution) -> Self {
        Cracker { scorer, execution }
    }

    pub fn with_execution(self, execution: Execution) -> Self {
        Cracker { execution, ..self }
    }

    /// Deciphers `ciphertext` under all 188 keys in `mode` and ranks the results.
    ///
    /// Ties are broken by `(a, k_init)` ascending, so the order does not
    /// depend on how candidates were scheduled.
    pub fn crack_latin(
        &self,
        ciphertext: &str,
        mode: AlphabetMode,
    ) -> Result<CrackReport<LatinKey>> {
        if ciphertext.is_empty() {
            return Err(Error::EmptyCiphertext);
        }
        let keys = enumerate_latin_keys(MIN_A, MAX_A, mode)?;
        let candidates = self.execution.map(&keys, |key| {
            let plaintext = LatinCipher::new(*key)
                .with_max_len(usize::MAX)
                .decipher(ciphertext)
                .expect("k_init >= 1 and no length cap");
            Candidate {
                key: *key,
                score: self.scorer.score(&plaintext),
                plaintext,
            }
        });
        Ok(CrackReport::ranked(candidates, |x, y| {
            (x.a(), x.k_init()).cmp(&(y.a(), y.k_init()))
        }))
    }

    /// Tries all 25 Caesar shifts.
    pub fn crack_caesar(&self, ciphertext: &str) -> Result<CrackReport<CaesarKey>> {
        if ciphertext.is_empty() {
            return Err(Error::EmptyCiphertext);
        }
        let keys: Vec<CaesarKey> = CaesarKey::all().collect();
        let candidates = self.execution.map(&keys, |&key| {
            let plaintext = caesar_decipher(ciphertext, key);
            Candidate {
                key,
                score: self.scorer.score(&plaintext),
                plaintext,
            }
        });
        debug_assert_eq!(candidates.len(), CAESAR_KEY_SPACE as usize);
        Ok(CrackReport::ranked(candidates, Ord::cmp))
    }
}

/// [`Cracker::crack_latin`] with the English table and default execution.
pub fn crack_latin(ciphertext: &str, mode: AlphabetMode) -> Result<CrackReport<LatinKey>> {
    Cracker::default().crack_latin(ciphertext, mode)
}

/// [`Cracker::crack_caesar`] with the English table and default execution.
pub fn crack_caesar(ciphertext: &str) -> Result<CrackReport<CaesarKey>> {
    Cracker::default().crack_caesar(ciphertext)
}
