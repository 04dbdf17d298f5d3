use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Lengths used when none are requested.
pub const DEFAULT_LENGTHS: [usize; 3] = [10, 50, 100];

const WORDS: &[&str] = &[
    "the",
    "of",
    "and",
    "to",
    "in",
    "is",
    "you",
    "that",
    "it",
    "he",
    "was",
    "for",
    "on",
    "are",
    "as",
    "with",
    "his",
    "they",
    "at",
    "be",
    "this",
    "have",
    "from",
    "or",
    "one",
    "had",
    "by",
    "word",
    "but",
    "not",
    "what",
    "all",
    "were",
    "we",
    "when",
    "your",
    "can",
    "said",
    "there",
    "use",
    "an",
    "each",
    "which",
    "she",
    "do",
    "how",
    "their",
    "if",
    "will",
    "up",
    "other",
    "about",
    "out",
    "many",
    "then",
    "them",
    "these",
    "so",
    "some",
    "her",
    "would",
    "make",
    "like",
    "him",
    "into",
    "time",
    "has",
    "look",
    "two",
    "more",
    "write",
    "go",
    "see",
    "number",
    "no",
    "way",
    "could",
    "people",
    "my",
    "than",
    "first",
    "water",
    "been",
    "call",
    "who",
    "oil",
    "its",
    "now",
    "find",
    "long",
    "down",
    "day",
    "did",
    "get",
    "come",
    "made",
    "may",
    "part",
    "over",
    "new",
    "sound",
    "take",
    "only",
    "little",
    "work",
    "know",
    "place",
    "year",
    "live",
    "me",
    "back",
    "give",
    "most",
    "very",
    "after",
    "thing",
    "our",
    "just",
    "name",
    "good",
    "sentence",
    "man",
    "think",
    "say",
    "great",
    "where",
    "help",
    "through",
    "much",
    "before",
    "line",
    "right",
    "too",
    "mean",
    "old",
    "any",
    "same",
    "tell",
    "boy",
    "follow",
    "came",
    "want",
    "show",
    "also",
    "around",
    "form",
    "three",
    "small",
    "set",
    "put",
    "end",
    "does",
    "another",
    "well",
    "large",
    "must",
    "big",
    "even",
    "such",
    "because",
    "turn",
    "here",
    "why",
    "ask",
    "went",
    "men",
    "read",
    "need",
    "land",
    "different",
    "home",
    "us",
    "move",
    "try",
    "kind",
    "hand",
    "picture",
    "again",
    "change",
    "off",
    "play",
    "spell",
    "air",
    "away",
    "animal",
    "house",
    "point",
    "page",
    "letter",
    "mother",
    "answer",
    "found",
    "study",
    "still",
    "learn",
    "should",
    "world",
    "high",
    "every",
    "near",
    "add",
    "food",
    "between",
    "own",
    "below",
    "country",
    "plant",
    "last",
    "school",
    "father",
    "keep",
    "tree",
    "never",
    "start",
    "city",
    "earth",
    "eye",
    "light",
    "thought",
    "head",
    "under",
    "story",
    "saw",
    "left",
    "few",
    "while",
    "along",
    "might",
    "close",
    "something",
    "seem",
    "next",
    "hard",
    "open",
    "example",
    "begin",
    "life",
    "always",
    "those",
    "both",
    "paper",
    "together",
    "got",
    "group",
    "often",
    "run",
    "important",
    "until",
    "children",
    "side",
    "feet",
    "car",
    "mile",
    "night",
    "walk",
    "white",
    "sea",
    "began",
    "grow",
    "took",
    "river",
    "four",
    "carry",
    "state",
    "once",
    "book",
    "hear",
    "stop",
    "without",
    "second",
    "later",
    "miss",
    "idea",
    "enough",
    "eat",
    "face",
    "watch",
    "far",
    "really",
    "almost",
    "let",
    "above",
    "girl",
    "sometimes",
    "mountain",
    "cut",
    "young",
    "talk",
    "soon",
    "list",
    "song",
    "being",
    "leave",
    "family",
    "security",
    "secret",
    "message",
    "cipher",
    "key",
];

const ENDINGS: &[char] = &['.', '.', '.', '!', '?'];

fn sentence(rng: &mut ChaCha8Rng) -> String {
    let words = rng.random_range(4..=12);
    let mut out = String::new();
    for i in 0..words {
        let word = WORDS.choose(rng).expect("word list is non-empty");
        if i == 0 {
            let mut chars = word.chars();
            if let Some(first) = chars.next() {
                out.push(first.to_ascii_uppercase());
                out.push_str(chars.as_str());
            }
        } else {
            if i + 1 < words && rng.random_bool(0.08) {
                out.push(',');
            }
            out.push(' ');
            out.push_str(word);
        }
    }
    out.push(*ENDINGS.choose(rng).expect("non-empty"));
    out
}

/// Deterministic pseudo-English texts (ASCII letters, spaces and punctuation)
/// of exactly the requested lengths.
pub fn generate_corpus(lengths: &[usize], seed: u64) -> Result<Vec<String>> {
    if lengths.contains(&0) {
        return Err(Error::CorpusLength);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let corpus = lengths
        .iter()
        .map(|&len| {
            let mut text = String::with_capacity(len + 80);
            while text.len() < len {
                if !text.is_empty() {
                    text.push(' ');
                }
                text.push_str(&sentence(&mut rng));
            }
            text.truncate(len);
            text
        })
        .collect();
    Ok(corpus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::english_fitness;

    #[test]
    fn deterministic() {
        assert_eq!(generate_corpus(&[10], 42), generate_corpus(&[10], 42));
        assert_ne!(generate_corpus(&[100], 1), generate_corpus(&[100], 2));
    }

    #[test]
    fn exact_lengths() {
        let one = generate_corpus(&[100], 7).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].chars().count(), 100);
        let three = generate_corpus(&DEFAULT_LENGTHS, 7).unwrap();
        let lens: Vec<usize> = three.iter().map(|t| t.chars().count()).collect();
        assert_eq!(lens, [10, 50, 100]);
        assert!(generate_corpus(&[1, 5000], 3).unwrap()[1].len() == 5000);
    }

    #[test]
    fn rejects_zero_length() {
        assert_eq!(generate_corpus(&[10, 0], 1), Err(Error::CorpusLength));
        assert_eq!(generate_corpus(&[], 1), Ok(vec![]));
    }

    #[test]
    fn looks_english() {
        let text = &generate_corpus(&[400], 11).unwrap()[0];
        assert!(text.is_ascii());
        assert!(text.contains(' '));
        assert!(text.chars().next().unwrap().is_ascii_uppercase());
        assert!(
            english_fitness(text).value() < 100.0,
            "{}",
            english_fitness(text)
        );
    }
}
