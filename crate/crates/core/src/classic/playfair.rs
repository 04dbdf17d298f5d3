use std::fmt;

use crate::error::{Error, Result};

/// Distinct 5x5 grids: 25!.
pub const PLAYFAIR_KEY_SPACE: u128 = 15_511_210_043_330_985_984_000_000;

const SIZE: usize = 5;

/// Letter used to break up doubled letters and pad an odd tail. A doubled or
/// trailing `X` gets `Q` instead, otherwise the pair would stay doubled.
fn filler_for(letter: u8) -> u8 {
    if letter == b'X' {
        b'Q'
    } else {
        b'X'
    }
}

fn normalize(c: char) -> Option<u8> {
    if !c.is_ascii_alphabetic() {
        return None;
    }
    match c.to_ascii_uppercase() as u8 {
        b'J' => Some(b'I'),
        b => Some(b),
    }
}

/// A 5x5 key square over the 25 letters `A..Z` without `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlayfairMatrix {
    grid: [[u8; SIZE]; SIZE],
    // row, column of each letter; J shares I's cell
    positions: [(u8, u8); 26],
    key_phrase: String,
}

impl PlayfairMatrix {
    /// Places the key phrase's letters first, skipping repeats, then the rest
    /// of the alphabet in order.
    pub fn new(key_phrase: &str) -> Result<Self> {
        if !key_phrase.chars().any(|c| c.is_ascii_alphabetic()) {
            return Err(Error::PlayfairKeyPhrase);
        }
        let mut placed = [false; 26];
        let mut order = Vec::with_capacity(25);
        let alphabet = (b'A'..=b'Z').map(char::from);
        for letter in key_phrase.chars().chain(alphabet).filter_map(normalize) {
            let idx = usize::from(letter - b'A');
            if !placed[idx] {
                placed[idx] = true;
                order.push(letter);
            }
        }
        debug_assert_eq!(order.len(), 25);

        let mut grid = [[0u8; SIZE]; SIZE];
        let mut positions = [(0u8, 0u8); 26];
        for (i, &letter) in order.iter().enumerate() {
            let (row, col) = (i / SIZE, i % SIZE);
            grid[row][col] = letter;
            positions[usize::from(letter - b'A')] = (row as u8, col as u8);
        }
        positions[usize::from(b'J' - b'A')] = positions[usize::from(b'I' - b'A')];

        Ok(PlayfairMatrix {
            grid,
            positions,
            key_phrase: key_phrase.to_owned(),
        })
    }

    pub fn key_phrase(&self) -> &str {
        &self.key_phrase
    }

    pub fn rows(&self) -> [[char; SIZE]; SIZE] {
        self.grid.map(|row| row.map(char::from))
    }

    fn position(&self, letter: u8) -> (usize, usize) {
        let (r, c) = self.positions[usize::from(letter - b'A')];
        (usize::from(r), usize::from(c))
    }

    fn transform(&self, pair: Digraph, step: usize) -> Digraph {
        let [first, second] = pair.0;
        let (r1, c1) = self.position(first);
        let (r2, c2) = self.position(second);
        let out = if r1 == r2 {
            [
                self.grid[r1][(c1 + step) % SIZE],
                self.grid[r2][(c2 + step) % SIZE],
            ]
        } else if c1 == c2 {
            [
                self.grid[(r1 + step) % SIZE][c1],
                self.grid[(r2 + step) % SIZE][c2],
            ]
        } else {
            [self.grid[r1][c2], self.grid[r2][c1]]
        };
        Digraph(out)
    }

    pub fn encipher_digraph(&self, pair: Digraph) -> Digraph {
        self.transform(pair, 1)
    }

    pub fn decipher_digraph(&self, pair: Digraph) -> Digraph {
        self.transform(pair, SIZE - 1)
    }
}

impl fmt::Display for PlayfairMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.grid {
            let line: Vec<String> = row.iter().map(|&b| char::from(b).to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Two uppercase letters processed as a unit.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Digraph(pub [u8; 2]);

impl Digraph {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("digraphs hold ASCII letters")
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Keeps letters only (uppercased, `J` folded into `I`) and splits them into
/// pairs, separating doubled letters and padding an odd tail.
pub fn playfair_prepare(text: &str) -> Vec<Digraph> {
    let letters: Vec<u8> = text.chars().filter_map(normalize).collect();
    let mut out = Vec::with_capacity(letters.len() / 2 + 1);
    let mut i = 0;
    while i < letters.len() {
        let first = letters[i];
        match letters.get(i + 1) {
            Some(&second) if second != first => {
                out.push(Digraph([first, second]));
                i += 2;
            }
            _ => {
                out.push(Digraph([first, filler_for(first)]));
                i += 1;
            }
        }
    }
    out
}

fn join(pairs: impl Iterator<Item = Digraph>) -> String {
    pairs.flat_map(|d| d.0).map(char::from).collect()
}

/// Prepares `text` and enciphers each digraph; the output is uppercase
/// letters only.
pub fn playfair_encipher(text: &str, matrix: &PlayfairMatrix) -> String {
    join(
        playfair_prepare(text)
            .into_iter()
            .map(|d| matrix.encipher_digraph(d)),
    )
}

/// Inverts [`playfair_encipher`]. Padding letters from preparation are kept.
pub fn playfair_decipher(ciphertext: &str, matrix: &PlayfairMatrix) -> Result<String> {
    let letters: Vec<u8> = ciphertext.chars().filter_map(normalize).collect();
    if !letters.len().is_multiple_of(2) {
        return Err(Error::PlayfairCiphertext(letters.len()));
    }
    Ok(join(
        letters
            .chunks_exact(2)
            .map(|p| matrix.decipher_digraph(Digraph([p[0], p[1]]))),
    ))
}
