//! Latin Djokovic: a polyalphabetic cipher that splits a message into groups
//! of `k_init` characters and Caesar-shifts each group by a key that grows by
//! one per group, wrapping back to `k_init` once it passes `b + 1`.
//!
//! The crate also carries Caesar, Vigenère and Playfair baselines, an
//! exhaustive-search cracker with chi-squared English scoring, and a
//! benchmark harness comparing all four ciphers.
//!
//! ```
//! use latin_djokovic::{decipher, encipher, AlphabetMode, LatinKey};
//!
//! let key = LatinKey::new(1, 3, AlphabetMode::CasePreserving).unwrap();
//! let ct = encipher("He surely likes Security and Bioethics, yes!", &key).unwrap();
//! assert_eq!(ct, "Kh wyvjqd oloiw Xjfxumxc fsg Emsiymnfv, cix!");
//! assert_eq!(decipher(&ct, &key).unwrap(), "He surely likes Security and Bioethics, yes!");
//! ```
//!
//! With the default `parallel` feature, brute-force search and benchmark
//! sweeps can fan out over rayon; without it they run sequentially.

pub mod alphabet;
pub mod analysis;
pub mod bench;
pub mod cipher;
pub mod classic;
mod error;
pub mod exec;
pub mod key;

pub use alphabet::{shift_char, AlphabetMode, Direction};
pub use cipher::{
    decipher, divide_in_groups, divide_in_groups_limited, encipher, LatinCipher, SubstringGroups,
    DEFAULT_MAX_LEN,
};
pub use error::{Error, Result};
pub use exec::Execution;
pub use key::{generate_key, key_schedule, LatinKey};
