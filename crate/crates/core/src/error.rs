use thiserror::Error;

/// Errors produced by the cipher, analysis and benchmark layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("key lower bound a={0} is out of range, expected 1 <= a <= 47")]
    KeyRange(i64),
    #[error("initial key k={k_init} is outside [{a}, {b}]")]
    InitialKeyRange { a: u32, b: u32, k_init: i64 },
    #[error("group size must be at least 1, got {0}")]
    InvalidGroupSize(usize),
    #[error("text has {len} characters, maximum is {max}")]
    TextTooLong { len: usize, max: usize },
    #[error("malformed key line: {0}")]
    KeyParse(String),
    #[error("caesar shift {0} is out of range, expected 1..=25")]
    CaesarShift(i64),
    #[error("vigenere keyword must be non-empty and contain only letters")]
    VigenereKeyword,
    #[error("playfair key phrase must contain at least one letter")]
    PlayfairKeyPhrase,
    #[error("playfair ciphertext must contain an even number of letters, got {0}")]
    PlayfairCiphertext(usize),
    #[error("key range [{0}, {1}] is invalid, expected 1 <= a_min <= a_max <= 47")]
    KeyEnumerationRange(u32, u32),
    #[error("ciphertext is empty")]
    EmptyCiphertext,
    #[error("frequency table: {0}")]
    FrequencyTable(String),
    #[error("corpus lengths must be positive")]
    CorpusLength,
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("at least 5 repetitions are required, got {0}")]
    TooFewRepetitions(usize),
    #[error("unknown report format `{0}`, expected csv or table")]
    UnknownFormat(String),
    #[error("no benchmark records to report")]
    EmptyRecords,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
