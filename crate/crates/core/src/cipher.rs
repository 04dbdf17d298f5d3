//! Group division and the Latin Djokovic encipher/decipher pipelines.
//!
//! A message is cut into consecutive groups of `k_init` characters (the last
//! one may be shorter, nothing is padded) and group `i` is Caesar-shifted by
//! the key schedule's `i`-th value.

use crate::alphabet::{shift_char, Direction};
use crate::error::{Error, Result};
use crate::key::LatinKey;

/// Default upper bound on message length, in characters.
pub const DEFAULT_MAX_LEN: usize = 100;

/// Ordered groups whose concatenation is the original text.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SubstringGroups {
    groups: Vec<String>,
}

impl SubstringGroups {
    pub fn groups(&self) -> &[String] {
        &self.groups
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.groups.iter().map(String::as_str)
    }

    pub fn concat(&self) -> String {
        self.groups.concat()
    }

    pub fn into_inner(self) -> Vec<String> {
        self.groups
    }
}

impl<'a> IntoIterator for &'a SubstringGroups {
    type Item = &'a String;
    type IntoIter = std::slice::Iter<'a, String>;

    fn into_iter(self) -> Self::IntoIter {
        self.groups.iter()
    }
}

/// Splits `text` into groups of `k` characters using the default length cap.
pub fn divide_in_groups(text: &str, k: usize) -> Result<SubstringGroups> {
    divide_in_groups_limited(text, k, DEFAULT_MAX_LEN)
}

/// Splits `text` into groups of `k` characters, rejecting texts longer than
/// `max_len` characters.
pub fn divide_in_groups_limited(text: &str, k: usize, max_len: usize) -> Result<SubstringGroups> {
    if k == 0 {
        return Err(Error::InvalidGroupSize(k));
    }
    check_len(text, max_len)?;
    let chars: Vec<char> = text.chars().collect();
    let groups = chars.chunks(k).map(|g| g.iter().collect()).collect();
    Ok(SubstringGroups { groups })
}

fn check_len(text: &str, max_len: usize) -> Result<()> {
    let len = text.chars().count();
    if len > max_len {
        Err(Error::TextTooLong { len, max: max_len })
    } else {
        Ok(())
    }
}

/// A key bound to a length limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatinCipher {
    key: LatinKey,
    max_len: usize,
}

impl LatinCipher {
    pub fn new(key: LatinKey) -> Self {
        LatinCipher {
            key,
            max_len: DEFAULT_MAX_LEN,
        }
    }

    /// Replaces the length cap; `usize::MAX` disables it.
    pub fn with_max_len(mut self, max_len: usize) -> Self {
        self.max_len = max_len;
        self
    }

    pub fn key(&self) -> &LatinKey {
        &self.key
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn encipher(&self, text: &str) -> Result<String> {
        self.transform(text, Direction::Right)
    }

    pub fn decipher(&self, ciphertext: &str) -> Result<String> {
        self.transform(ciphertext, Direction::Left)
    }

    // Encipherment preserves length, so deciphering divides with the same
    // group size and sees the same group boundaries.
    fn transform(&self, text: &str, direction: Direction) -> Result<String> {
        let groups = divide_in_groups_limited(text, self.key.k_init() as usize, self.max_len)?;
        let mode = self.key.mode();
        let mut out = String::with_capacity(text.len());
        for (group, shift) in groups.iter().zip(self.key.schedule()) {
            out.extend(group.chars().map(|c| shift_char(c, shift, direction, mode)));
        }
        Ok(out)
    }
}

/// Enciphers `text` with `key` under the default length cap.
pub fn encipher(text: &str, key: &LatinKey) -> Result<String> {
    LatinCipher::new(*key).encipher(text)
}

/// Deciphers `ciphertext` with `key` under the default length cap.
pub fn decipher(ciphertext: &str, key: &LatinKey) -> Result<String> {
    LatinCipher::new(*key).decipher(ciphertext)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::AlphabetMode::{self, *};

    const EXAMPLE: &str = "He surely likes Security and Bioethics, yes!";
    const EXAMPLE_CIPHER: &str = "Kh wyvjqd oloiw Xjfxumxc fsg Emsiymnfv, cix!";

    fn key(a: u32, k: u32, mode: AlphabetMode) -> LatinKey {
        LatinKey::new(a, k, mode).unwrap()
    }

    #[test]
    fn worked_example_split() {
        let groups = divide_in_groups(EXAMPLE, 3).unwrap();
        let expected = [
            "He ", "sur", "ely", " li", "kes", " Se", "cur", "ity", " an", "d B", "ioe", "thi",
            "cs,", " ye", "s!",
        ];
        assert_eq!(groups.groups(), expected);
        assert_eq!(groups.concat(), EXAMPLE);
    }

    #[test]
    fn split_edge_cases() {
        assert!(divide_in_groups("", 3).unwrap().is_empty());
        assert_eq!(
            divide_in_groups("abcde", 2).unwrap().groups(),
            ["ab", "cd", "e"]
        );
        assert_eq!(divide_in_groups("abc", 7).unwrap().groups(), ["abc"]);
        assert_eq!(divide_in_groups("ab", 0), Err(Error::InvalidGroupSize(0)));
        let long = "x".repeat(101);
        assert_eq!(
            divide_in_groups(&long, 3),
            Err(Error::TextTooLong { len: 101, max: 100 })
        );
        assert_eq!(divide_in_groups_limited(&long, 3, 200).unwrap().len(), 34);
    }

    #[test]
    fn split_counts_characters_not_bytes() {
        let groups = divide_in_groups("äöüß", 3).unwrap();
        assert_eq!(groups.groups(), ["äöü", "ß"]);
    }

    #[test]
    fn worked_example_round_trip() {
        let k = key(1, 3, CasePreserving);
        assert_eq!(encipher(EXAMPLE, &k).unwrap(), EXAMPLE_CIPHER);
        assert_eq!(decipher(EXAMPLE_CIPHER, &k).unwrap(), EXAMPLE);
    }

    #[test]
    fn single_character_groups() {
        // groups "a","a","a"," ","a","a","a" take shifts 1,2,3,4,5,1,2
        let k = key(1, 1, CasePreserving);
        assert_eq!(encipher("aaa aaa", &k).unwrap(), "bcd fbc");
    }

    #[test]
    fn empty_text() {
        let k = key(4, 6, Unified52);
        assert_eq!(encipher("", &k).unwrap(), "");
        assert_eq!(decipher("", &k).unwrap(), "");
    }

    #[test]
    fn length_cap_is_configurable() {
        let k = key(2, 3, CasePreserving);
        let text = "abc ".repeat(40);
        assert!(matches!(
            encipher(&text, &k),
            Err(Error::TextTooLong { len: 160, max: 100 })
        ));
        let cipher = LatinCipher::new(k).with_max_len(200);
        let ct = cipher.encipher(&text).unwrap();
        assert_eq!(cipher.decipher(&ct).unwrap(), text);
    }

    #[test]
    fn unified_mode_changes_case() {
        let k = key(20, 23, Unified52);
        let ct = encipher("Zebra", &k).unwrap();
        // 'Z' is index 25 of [A..Z a..z]; 25 + 23 = 48 is 'w'
        assert_ne!(ct, "Zebra");
        assert_eq!(decipher(&ct, &k).unwrap(), "Zebra");
        assert_eq!(ct.chars().next(), Some('w'));
    }
}
