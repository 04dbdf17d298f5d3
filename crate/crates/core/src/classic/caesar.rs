use crate::alphabet::{shift_str, AlphabetMode, Direction};
use crate::error::{Error, Result};

/// Number of non-trivial Caesar keys.
pub const CAESAR_KEY_SPACE: u32 = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaesarKey(u32);

impl CaesarKey {
    pub fn new(shift: i64) -> Result<Self> {
        if (1..=i64::from(CAESAR_KEY_SPACE)).contains(&shift) {
            Ok(CaesarKey(shift as u32))
        } else {
            Err(Error::CaesarShift(shift))
        }
    }

    pub fn shift(self) -> u32 {
        self.0
    }

    /// Every key, `1..=25`.
    pub fn all() -> impl Iterator<Item = CaesarKey> {
        (1..=CAESAR_KEY_SPACE).map(CaesarKey)
    }
}

pub fn caesar_encipher(text: &str, key: CaesarKey) -> String {
    shift_str(text, key.0, Direction::Right, AlphabetMode::CasePreserving)
}

pub fn caesar_decipher(text: &str, key: CaesarKey) -> String {
    shift_str(text, key.0, Direction::Left, AlphabetMode::CasePreserving)
}
