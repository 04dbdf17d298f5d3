//! Exhaustive key search over the Latin Djokovic and Caesar key spaces,
//! ranked by an English fitness score.

mod crack;
mod fitness;

pub use crack::{
    crack_caesar, crack_latin, enumerate_latin_keys, Candidate, CrackReport, Cracker,
    LATIN_KEY_SPACE,
};
pub use fitness::{english_fitness, BigramTable, FitnessScore, FrequencyTable, Scorer};
