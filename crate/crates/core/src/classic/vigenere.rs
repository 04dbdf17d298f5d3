use crate::alphabet::{shift_char, AlphabetMode, Direction};
use crate::error::{Error, Result};

/// A non-empty, letters-only keyword, stored uppercase.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VigenereKey {
    shifts: Vec<u8>,
}

impl VigenereKey {
    pub fn new(keyword: &str) -> Result<Self> {
        if keyword.is_empty() || !keyword.chars().all(|c| c.is_ascii_alphabetic()) {
            return Err(Error::VigenereKeyword);
        }
        let shifts = keyword
            .bytes()
            .map(|b| b.to_ascii_uppercase() - b'A')
            .collect();
        Ok(VigenereKey { shifts })
    }

    pub fn keyword(&self) -> String {
        self.shifts.iter().map(|&s| (b'A' + s) as char).collect()
    }

    pub fn len(&self) -> usize {
        self.shifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shifts.is_empty()
    }
}

// Non-letters pass through and do not advance the keyword.
fn apply(text: &str, key: &VigenereKey, direction: Direction) -> String {
    let mut shifts = key.shifts.iter().cycle();
    text.chars()
        .map(|c| {
            if c.is_ascii_alphabetic() {
                let shift = *shifts.next().expect("keyword is non-empty");
                shift_char(c, u32::from(shift), direction, AlphabetMode::CasePreserving)
            } else {
                c
            }
        })
        .collect()
}

pub fn vigenere_encipher(text: &str, key: &VigenereKey) -> String {
    apply(text, key, Direction::Right)
}

pub fn vigenere_decipher(text: &str, key: &VigenereKey) -> String {
    apply(text, key, Direction::Left)
}
