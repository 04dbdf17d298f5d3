//! Alphabets and the single-character Caesar shift every cipher builds on.
//!
//! Only the ASCII letters `A-Z` and `a-z` move. Everything else, including
//! digits, punctuation, whitespace and non-ASCII characters, maps to itself.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// The alphabet a Latin Djokovic shift travels over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum AlphabetMode {
    /// Two independent 26-letter rings; a letter never changes case.
    #[default]
    CasePreserving,
    /// One 52-letter ring `A..Z a..z`; shifting past `Z` continues at `a`.
    Unified52,
}

impl AlphabetMode {
    /// Number of letters in one ring of this alphabet.
    pub const fn ring_size(self) -> u32 {
        match self {
            AlphabetMode::CasePreserving => 26,
            AlphabetMode::Unified52 => 52,
        }
    }

    /// Token used in the key line (`case` or `unified52`).
    pub const fn as_str(self) -> &'static str {
        match self {
            AlphabetMode::CasePreserving => "case",
            AlphabetMode::Unified52 => "unified52",
        }
    }
}

impl fmt::Display for AlphabetMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlphabetMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "case" => Ok(AlphabetMode::CasePreserving),
            "unified52" => Ok(AlphabetMode::Unified52),
            other => Err(Error::KeyParse(format!("unknown mode `{other}`"))),
        }
    }
}

/// Which way a shift moves along the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Right,
    Left,
}

impl Direction {
    pub const fn inverse(self) -> Self {
        match self {
            Direction::Right => Direction::Left,
            Direction::Left => Direction::Right,
        }
    }
}

#[inline]
fn rotate(index: u32, shift: u32, ring: u32, direction: Direction) -> u32 {
    let shift = shift % ring;
    match direction {
        Direction::Right => (index + shift) % ring,
        Direction::Left => (index + ring - shift) % ring,
    }
}

/// Shifts `c` by `shift` positions in `direction` over the alphabet `mode`.
///
/// Total on every `char`: non-letters come back unchanged, and `Left` undoes
/// `Right` for every shift.
#[inline]
pub fn shift_char(c: char, shift: u32, direction: Direction, mode: AlphabetMode) -> char {
    if !c.is_ascii_alphabetic() {
        return c;
    }
    let byte = c as u8;
    let shifted = match mode {
        AlphabetMode::CasePreserving => {
            let base = if byte.is_ascii_uppercase() {
                b'A'
            } else {
                b'a'
            };
            base + rotate(u32::from(byte - base), shift, 26, direction) as u8
        }
        AlphabetMode::Unified52 => {
            // [A..Z] occupy 0..26, [a..z] occupy 26..52
            let index = if byte.is_ascii_uppercase() {
                byte - b'A'
            } else {
                byte - b'a' + 26
            };
            let next = rotate(u32::from(index), shift, 52, direction) as u8;
            if next < 26 {
                b'A' + next
            } else {
                b'a' + (next - 26)
            }
        }
    };
    shifted as char
}

/// Shifts every character of `text`; convenience for whole-string Caesar shifts.
pub fn shift_str(text: &str, shift: u32, direction: Direction, mode: AlphabetMode) -> String {
    text.chars()
        .map(|c| shift_char(c, shift, direction, mode))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    use AlphabetMode::*;
    use Direction::*;

    const UNIFIED: &str = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

    // Reference shift over an explicit list of letters.
    fn list_oracle(c: char, shift: u32, direction: Direction, mode: AlphabetMode) -> char {
        let ring: Vec<char> = match mode {
            CasePreserving if c.is_ascii_uppercase() => UNIFIED.chars().take(26).collect(),
            CasePreserving => UNIFIED.chars().skip(26).collect(),
            Unified52 => UNIFIED.chars().collect(),
        };
        let Some(pos) = ring.iter().position(|&x| x == c) else {
            return c;
        };
        let n = ring.len() as i64;
        let step = match direction {
            Right => shift as i64,
            Left => -(shift as i64),
        };
        ring[(pos as i64 + step).rem_euclid(n) as usize]
    }

    #[test]
    fn worked_example_shifts() {
        assert_eq!(shift_char('H', 3, Right, CasePreserving), 'K');
        assert_eq!(shift_char('y', 5, Right, CasePreserving), 'd');
        assert_eq!(shift_char(' ', 7, Right, CasePreserving), ' ');
        assert_eq!(shift_char('a', 26, Right, CasePreserving), 'a');
    }

    #[test]
    fn unified_ring_crosses_case() {
        assert_eq!(shift_char('Z', 1, Right, Unified52), 'a');
        assert_eq!(shift_char('z', 1, Right, Unified52), 'A');
        assert_eq!(shift_char('a', 1, Left, Unified52), 'Z');
        assert_eq!(shift_char('A', 51, Right, Unified52), 'z');
    }

    #[test]
    fn non_letters_are_fixed() {
        for c in ['0', '9', '!', ',', '\n', 'é', 'ß', '\u{1F600}', '[', '`'] {
            for mode in [CasePreserving, Unified52] {
                assert_eq!(shift_char(c, 17, Right, mode), c);
                assert_eq!(shift_char(c, 17, Left, mode), c);
            }
        }
    }

    #[test]
    fn matches_list_oracle_exhaustively() {
        for c in UNIFIED.chars() {
            for shift in 0..=110 {
                for mode in [CasePreserving, Unified52] {
                    for dir in [Right, Left] {
                        assert_eq!(
                            shift_char(c, shift, dir, mode),
                            list_oracle(c, shift, dir, mode),
                            "{c} {shift} {dir:?} {mode:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn case_mode_reduces_mod_26() {
        for c in UNIFIED.chars() {
            for shift in 0..=103 {
                for dir in [Right, Left] {
                    assert_eq!(
                        shift_char(c, shift, dir, CasePreserving),
                        shift_char(c, shift % 26, dir, CasePreserving)
                    );
                }
            }
        }
    }

    #[test]
    fn mode_tokens_round_trip() {
        for mode in [CasePreserving, Unified52] {
            assert_eq!(mode.as_str().parse::<AlphabetMode>().unwrap(), mode);
        }
        assert!("Case".parse::<AlphabetMode>().is_err());
    }

    proptest! {
        #[test]
        fn left_inverts_right(c in any::<char>(), shift in 0u32..10_000, unified in any::<bool>()) {
            let mode = if unified { Unified52 } else { CasePreserving };
            prop_assert_eq!(shift_char(shift_char(c, shift, Right, mode), shift, Left, mode), c);
            prop_assert_eq!(shift_char(shift_char(c, shift, Left, mode), shift, Right, mode), c);
        }
    }
}
