//! The three ancestor ciphers, used as cryptanalysis baselines and benchmark
//! competitors.

mod caesar;
mod playfair;
mod vigenere;

pub use caesar::{caesar_decipher, caesar_encipher, CaesarKey, CAESAR_KEY_SPACE};
pub use playfair::{
    playfair_decipher, playfair_encipher, playfair_prepare, Digraph, PlayfairMatrix,
    PLAYFAIR_KEY_SPACE,
};
pub use vigenere::{vigenere_decipher, vigenere_encipher, VigenereKey};
